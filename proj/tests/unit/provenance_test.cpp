#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/provenance.hpp"
#include "core/serialize.hpp"
#include "fixture.hpp"

namespace vocp {
namespace {

using testing_support::make_artifact;

struct RawRecord {
  std::string author;
  std::string channel;
  std::string created_at;
};

// Reads the fixture straight from disk, bypassing the corpus module.
std::map<std::string, RawRecord> raw_fixture() {
  std::map<std::string, RawRecord> out;
  std::ifstream in(testing_support::fixture_corpus_path());
  std::string line;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    out[j["id"]] = {j["author_id"], j["channel"], j["created_at"]};
  }
  return out;
}

TEST(Card, RecountsFromRawFixture) {
  auto fx = testing_support::make_fixture_engine();
  const auto raw = raw_fixture();
  const auto clusters = fx->engine->clusters("fx");
  for (const auto& p : fx->personas) {
    std::set<std::string> members;
    for (const auto& c : clusters) {
      if (std::find(p.cluster_ids.begin(), p.cluster_ids.end(), c.cluster_id) != p.cluster_ids.end()) {
        members.insert(c.member_ids.begin(), c.member_ids.end());
      }
    }
    std::set<std::string> authors;
    std::set<std::string> channels;
    std::string min_date = "9999";
    std::string max_date;
    for (const auto& id : members) {
      const auto& r = raw.at(id);
      authors.insert(r.author);
      channels.insert(r.channel);
      min_date = std::min(min_date, r.created_at);
      max_date = std::max(max_date, r.created_at);
    }
    const auto card = fx->engine->card(p.persona_id);
    EXPECT_EQ(card.persona_id, p.persona_id);
    EXPECT_EQ(card.segment_metrics.user_count, authors.size());
    EXPECT_EQ(card.segment_metrics.message_count, members.size());
    EXPECT_EQ(card.data_provenance.channels, std::vector<std::string>(channels.begin(), channels.end()));
    EXPECT_EQ(format_rfc3339(card.data_provenance.temporal_range.min), min_date);
    EXPECT_EQ(format_rfc3339(card.data_provenance.temporal_range.max), max_date);
    EXPECT_EQ(format_rfc3339(card.generated_at), testing_support::kFixedTime);
    EXPECT_EQ(card.topic_coverage.gaps, p.gaps);
    std::size_t covered_total = 0;
    for (const auto& [label, n] : card.topic_coverage.covered) {
      EXPECT_GE(n, 5u);
      covered_total += n;
    }
    EXPECT_LE(covered_total, members.size());
    EXPECT_GE(card.model_specifications.risks.size(), 3u);
    EXPECT_EQ(card.model_specifications.backend, "extractive-reference/1.0");
  }
}

struct Small {
  Corpus corpus;
  std::vector<TopicCluster> clusters;
  PersonaSegment persona;
};

Small small_segment(std::vector<std::string> terms) {
  std::vector<VocArtifact> records;
  for (int i = 0; i < 6; ++i) {
    records.push_back(make_artifact("a" + std::to_string(i), "u" + std::to_string(i % 2),
                                    i < 5 ? "battery drains" : "screen flickers",
                                    "2024-0" + std::to_string(i + 1) + "-15T08:00:00Z",
                                    i % 2 ? "review" : "forum"));
  }
  Small s{ingest_corpus(records, "c", {{"appstore"}, {"export"}}), {}, {}};
  s.clusters = {{"topic-001", {}, {"a0", "a1", "a2", "a3", "a4", "a5"}, terms}};
  s.persona = derive_personas(s.clusters, s.corpus, 5, 5).at(0);
  return s;
}

TEST(Card, HandBuiltSegment) {
  const auto s = small_segment({"battery", "screen"});
  const auto card = build_card(s.persona, s.clusters, s.corpus, {"b", {"r1"}}, 5, {});
  EXPECT_EQ(card.segment_metrics.user_count, 2u);
  EXPECT_EQ(card.segment_metrics.message_count, 6u);
  EXPECT_EQ(card.data_provenance.channels, (std::vector<std::string>{"forum", "review"}));
  EXPECT_EQ(card.data_provenance.platforms, (std::vector<std::string>{"appstore"}));
  EXPECT_EQ(card.data_provenance.collection_methods, (std::vector<std::string>{"export"}));
  EXPECT_EQ(format_rfc3339(card.data_provenance.temporal_range.min), "2024-01-15T08:00:00Z");
  EXPECT_EQ(format_rfc3339(card.data_provenance.temporal_range.max), "2024-06-15T08:00:00Z");
  EXPECT_EQ(card.topic_coverage.covered, (std::vector<std::pair<std::string, std::size_t>>{{"battery", 5}}));
  EXPECT_EQ(card.topic_coverage.gaps, (std::vector<std::string>{"screen"}));
  EXPECT_EQ(card.model_specifications.risks, (std::vector<std::string>{"r1"}));
}

TEST(Card, CorpusMismatch) {
  const auto s = small_segment({"battery"});
  auto foreign = s.persona;
  foreign.persona_id = "other-p01";
  try {
    build_card(foreign, s.clusters, s.corpus, {}, 5, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorpusMismatch);
  }
  auto clusters = s.clusters;
  clusters[0].member_ids.push_back("zz");
  EXPECT_THROW(build_card(s.persona, clusters, s.corpus, {}, 5, {}), Error);
}

TEST(Card, JsonRoundTripAndDeterminism) {
  const auto s = small_segment({"battery", "screen"});
  const auto card = build_card(s.persona, s.clusters, s.corpus, {"b", baseline_risks()}, 5, {});
  const auto json = render_card(card, CardFormat::kJson);
  EXPECT_EQ(parse_card_json(json), card);
  EXPECT_EQ(render_card(build_card(s.persona, s.clusters, s.corpus, {"b", baseline_risks()}, 5, {}), CardFormat::kJson),
            json);
  const auto j = nlohmann::json::parse(json);
  for (const char* key : {"data_provenance", "model_specifications", "segment_metrics", "topic_coverage"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Card, MarkdownSectionsInOrder) {
  const auto s = small_segment({"battery", "screen"});
  const auto md = render_card(build_card(s.persona, s.clusters, s.corpus, {"b", baseline_risks()}, 5, {}),
                              CardFormat::kMarkdown);
  std::vector<std::string> headings;
  std::istringstream in(md);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("## ", 0) == 0) headings.push_back(line.substr(3));
  }
  EXPECT_EQ(headings, (std::vector<std::string>{"Data Provenance", "Model Specifications", "Segment Metrics",
                                                "Topic Coverage"}));
  EXPECT_NE(md.find("| battery | 5 |"), std::string::npos);
  EXPECT_NE(md.find("Documented gaps: screen."), std::string::npos);
}

TEST(Card, NoGapsSentence) {
  const auto s = small_segment({"battery"});
  auto persona = s.persona;
  const auto card = build_card(persona, s.clusters, s.corpus, {"b", {}}, 1, {});
  EXPECT_TRUE(card.topic_coverage.gaps.empty());
  EXPECT_NE(render_card(card, CardFormat::kMarkdown).find("No documented gaps."), std::string::npos);
}

}  // namespace
}  // namespace vocp
