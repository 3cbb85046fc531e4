#include <gtest/gtest.h>

#include <numeric>

#include "core/corpus.hpp"
#include "core/corpus_store.hpp"
#include "core/error.hpp"
#include "fixture.hpp"

namespace vocp {
namespace {

using testing_support::make_artifact;

ErrorCode code_of(std::string_view line) {
  try {
    parse_artifact_record(line);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << line;
  return ErrorCode::kInternal;
}

TEST(ParseArtifactRecord, MapsAllFields) {
  const auto a = parse_artifact_record(
      R"({"id":"a1","author_id":"u1","channel":"review","created_at":"2024-01-01T00:00:00Z",)"
      R"("text":"  battery dies fast ","media_transcript":"clip","lang":"en","extra":1})");
  EXPECT_EQ(a.id, "a1");
  EXPECT_EQ(a.author_id, "u1");
  EXPECT_EQ(a.channel, "review");
  EXPECT_EQ(format_rfc3339(a.created_at), "2024-01-01T00:00:00Z");
  EXPECT_EQ(a.text, "battery dies fast");
  EXPECT_EQ(a.media_transcript, "clip");
  EXPECT_EQ(a.lang, "en");
  EXPECT_EQ(a.retrievable_text(), "battery dies fast\n\nclip");
}

TEST(ParseArtifactRecord, Errors) {
  EXPECT_EQ(code_of(R"({"author_id":"u","channel":"c","created_at":"2024-01-01T00:00:00Z","text":"x"})"),
            ErrorCode::kMissingField);
  EXPECT_EQ(code_of(R"({"id":"a","author_id":"u","channel":"c","created_at":"yesterday","text":"x"})"),
            ErrorCode::kBadTimestamp);
  EXPECT_EQ(code_of(R"({"id":"a","author_id":"u","channel":"c","created_at":"2024-01-01T00:00:00Z","text":"  "})"),
            ErrorCode::kEmptyText);
  EXPECT_EQ(code_of("{not json"), ErrorCode::kBadRecord);
  EXPECT_EQ(code_of(R"({"id":7,"author_id":"u","channel":"c","created_at":"2024-01-01T00:00:00Z","text":"x"})"),
            ErrorCode::kBadRecord);
}

TEST(MissingField, NamesTheField) {
  try {
    parse_artifact_record(R"({"author_id":"u","channel":"c","created_at":"2024-01-01T00:00:00Z","text":"x"})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'id'"), std::string::npos);
  }
}

TEST(IngestCorpus, DropsDuplicateIdsFirstWins) {
  const auto c = ingest_corpus({make_artifact("a1", "u1", "first"), make_artifact("a1", "u2", "second")}, "c");
  EXPECT_EQ(c.message_count(), 1u);
  EXPECT_EQ(c.at("a1").text, "first");
}

TEST(IngestCorpus, CountsDistinctAuthors) {
  const auto c = ingest_corpus(
      {make_artifact("a1", "u1", "x"), make_artifact("a2", "u1", "y"), make_artifact("a3", "u2", "z")}, "c");
  EXPECT_EQ(c.author_count(), 2u);
}

TEST(IngestCorpus, TemporalRange) {
  const auto c = ingest_corpus({make_artifact("a1", "u1", "x", "2024-06-30T00:00:00Z"),
                                make_artifact("a2", "u1", "y", "2024-01-01T00:00:00Z")},
                               "c");
  EXPECT_EQ(format_rfc3339(c.temporal_range().min), "2024-01-01T00:00:00Z");
  EXPECT_EQ(format_rfc3339(c.temporal_range().max), "2024-06-30T00:00:00Z");
}

TEST(IngestCorpus, EmptyCorpusRejected) {
  try {
    ingest_corpus({}, "c");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(IngestCorpus, UnknownArtifactLookup) {
  const auto c = ingest_corpus({make_artifact("a1", "u1", "x")}, "c");
  EXPECT_EQ(c.find("nope"), nullptr);
  EXPECT_THROW(c.at("nope"), Error);
}

TEST(CorpusStats, SingleChannelBucket) {
  std::vector<VocArtifact> records;
  for (int i = 0; i < 5; ++i) records.push_back(make_artifact("a" + std::to_string(i), "u", "t", "2024-01-01T00:00:00Z", "social"));
  const auto stats = corpus_stats(ingest_corpus(records, "c"));
  EXPECT_EQ(stats.per_channel, (std::map<std::string, std::size_t>{{"social", 5}}));
}

TEST(CorpusStats, PartitionsByChannelAndMonth) {
  const auto c = ingest_corpus({make_artifact("a1", "u1", "t", "2024-01-05T00:00:00Z", "social"),
                                make_artifact("a2", "u2", "t", "2024-01-31T23:59:59Z", "social"),
                                make_artifact("a3", "u1", "t", "2024-02-01T00:00:00Z", "social"),
                                make_artifact("a4", "u3", "t", "2024-02-10T00:00:00Z", "review"),
                                make_artifact("a5", "u3", "t", "2024-02-11T00:00:00Z", "review")},
                               "c");
  const auto stats = corpus_stats(c);
  EXPECT_EQ(stats.per_channel, (std::map<std::string, std::size_t>{{"review", 2}, {"social", 3}}));
  EXPECT_EQ(stats.per_month, (std::map<std::string, std::size_t>{{"2024-01", 2}, {"2024-02", 3}}));
  auto sum = [](const auto& m) {
    return std::accumulate(m.begin(), m.end(), std::size_t{0}, [](std::size_t s, const auto& kv) { return s + kv.second; });
  };
  EXPECT_EQ(sum(stats.per_channel), c.message_count());
  EXPECT_EQ(sum(stats.per_author), c.message_count());
  EXPECT_EQ(sum(stats.per_month), c.message_count());
}

TEST(Feed, SkipsBadLinesWithDiagnostics) {
  const std::string feed =
      R"({"id":"a1","author_id":"u","channel":"c","created_at":"2024-01-01T00:00:00Z","text":"ok text"})"
      "\n\n"
      R"({"id":"a2","author_id":"u","channel":"c","created_at":"nope","text":"x"})"
      "\n"
      "garbage\n";
  const auto result = parse_artifact_feed(feed);
  ASSERT_EQ(result.records.size(), 1u);
  ASSERT_EQ(result.diagnostics.size(), 2u);
  EXPECT_EQ(result.diagnostics[0].line, 3u);
  EXPECT_EQ(result.diagnostics[0].code, ErrorCode::kBadTimestamp);
  EXPECT_EQ(result.diagnostics[1].line, 4u);
  EXPECT_EQ(result.diagnostics[1].code, ErrorCode::kBadRecord);
}

TEST(CorpusProperties, ExportReingestRoundTrip) {
  const auto feed = parse_artifact_feed(testing_support::read_file(testing_support::fixture_corpus_path()));
  ASSERT_TRUE(feed.diagnostics.empty());
  const auto original = ingest_corpus(feed.records, "fx");
  const auto again = parse_artifact_feed(export_corpus_jsonl(original));
  ASSERT_TRUE(again.diagnostics.empty());
  const auto copy = ingest_corpus(again.records, "fx");
  EXPECT_EQ(copy, original);
  EXPECT_EQ(copy.channels(), original.channels());
  EXPECT_EQ(copy.temporal_range(), original.temporal_range());
  EXPECT_EQ(copy.author_count(), original.author_count());
}

TEST(CorpusProperties, DoubleIngestIsIdempotent) {
  auto records = parse_artifact_feed(testing_support::read_file(testing_support::fixture_corpus_path())).records;
  const auto once = ingest_corpus(records, "fx");
  auto twice = records;
  twice.insert(twice.end(), records.begin(), records.end());
  EXPECT_EQ(ingest_corpus(twice, "fx"), once);
}

TEST(Identifier, Validation) {
  EXPECT_TRUE(is_valid_identifier("fx-2024_v1.2"));
  EXPECT_FALSE(is_valid_identifier(""));
  EXPECT_FALSE(is_valid_identifier(".."));
  EXPECT_FALSE(is_valid_identifier("a/b"));
  EXPECT_FALSE(is_valid_identifier(std::string(129, 'a')));
}

TEST(CorpusStore, PersistsAndReloads) {
  testing_support::TempDir dir;
  CorpusStore store(dir.path());
  CorpusMeta meta;
  meta.platforms = {"Reddit"};
  meta.collection_methods = {"public API export"};
  auto a = make_artifact("a1", "u1", "hello there");
  a.media_transcript = "video words";
  const auto c = ingest_corpus({a, make_artifact("a2", "u2", "second")}, "keep", meta);
  store.write(c);
  EXPECT_TRUE(store.exists("keep"));
  EXPECT_EQ(store.list(), std::vector<std::string>{"keep"});
  EXPECT_EQ(store.load("keep"), c);
  try {
    store.write(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorpusExists);
  }
  try {
    store.load("absent");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownCorpus);
  }
}

}  // namespace
}  // namespace vocp
