#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "core/corpus.hpp"
#include "core/embedding.hpp"
#include "core/error.hpp"
#include "core/vector_index.hpp"
#include "fixture.hpp"
#include "oracles.hpp"
#include "synth/synth.hpp"

namespace vocp {
namespace {

using testing_support::make_artifact;

EmbeddingVector negate(EmbeddingVector v) {
  for (double& x : v.values) x = -x;
  return v;
}

TEST(Embed, EmptyTextRejected) {
  for (const char* t : {"", "   ", "\n\t"}) {
    try {
      embed_text(t);
      FAIL() << "accepted blank text";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kEmptyText);
    }
  }
}

TEST(Embed, DeterministicUnitVectors) {
  const std::string t = "Battery dies fast after the update!";
  const auto a = embed_text(t);
  const auto b = embed_text(t);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.dimension(), kEmbeddingDim);
  double n = 0;
  for (double x : a.values) n += x * x;
  EXPECT_NEAR(std::sqrt(n), 1.0, 1e-6);
}

TEST(Embed, UnitNormForOddInputs) {
  for (const char* t : {"a", "ab", "!!!", "...?", "é", "naïve café", "x y"}) {
    const auto v = embed_text(t);
    double n = 0;
    for (double x : v.values) n += x * x;
    EXPECT_NEAR(std::sqrt(n), 1.0, 1e-6) << t;
  }
}

TEST(Embed, MatchesOracle) {
  for (const auto& r : synth::fixture_records()) {
    const auto v = embed_text(r.text);
    const auto o = oracle::embed(r.text);
    for (std::size_t i = 0; i < kEmbeddingDim; ++i) ASSERT_NEAR(v.values[i], o[i], 1e-12) << r.id;
  }
}

TEST(Embed, CaseAndWhitespaceInsensitive) {
  EXPECT_EQ(embed_text("Sync  FAILS\toffline"), embed_text("sync fails offline"));
}

TEST(Cosine, IdentityAndAntipodal) {
  const auto v = embed_text("search results are useless");
  EXPECT_NEAR(cosine_similarity(v, v), 1.0, 1e-6);
  EXPECT_NEAR(cosine_similarity(v, negate(v)), -1.0, 1e-6);
}

TEST(Cosine, BucketDisjointTextsAreOrthogonal) {
  const auto texts = oracle::bucket_disjoint_texts(2, 4, 99);
  const auto a = oracle::buckets(texts[0]);
  const auto b = oracle::buckets(texts[1]);
  for (auto x : a) ASSERT_FALSE(b.contains(x));
  // The embedder agrees on the bucket sets it touches.
  const auto ea = trigram_buckets(texts[0]);
  EXPECT_EQ(std::set<std::size_t>(ea.begin(), ea.end()), a);
  EXPECT_NEAR(cosine_similarity(embed_text(texts[0]), embed_text(texts[1])), 0.0, 1e-6);
}

TEST(Cosine, DimensionMismatch) {
  EmbeddingVector small{std::vector<double>(3, 0.5)};
  try {
    cosine_similarity(small, embed_text("abc"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(BuildIndex, OneEntryPerArtifact) {
  const auto c = ingest_corpus({make_artifact("a", "u", "alpha text"), make_artifact("b", "u", "beta text"),
                                make_artifact("c", "u", "gamma text")},
                               "c");
  const auto built = build_index(c);
  EXPECT_EQ(built.index.size(), 3u);
  EXPECT_TRUE(built.skipped.empty());
  EXPECT_EQ(build_index(c).index, built.index);
}

TEST(BuildIndex, WhitespaceOnlyArtifactSkipped) {
  const auto c = ingest_corpus({make_artifact("a", "u", "alpha"), make_artifact("b", "u", "   "),
                                make_artifact("c", "u", "gamma")},
                               "c");
  const auto built = build_index(c);
  EXPECT_EQ(built.index.size(), 2u);
  ASSERT_EQ(built.skipped.size(), 1u);
  EXPECT_EQ(built.skipped[0].artifact_id, "b");
  EXPECT_FALSE(built.index.row_of("b"));
}

class QueryTopK : public ::testing::Test {
 protected:
  void SetUp() override {
    std::vector<VocArtifact> records;
    for (const auto& r : synth::bulk_records(1000, 5)) records.push_back(make_artifact(r.id, r.author_id, r.text));
    corpus_ = ingest_corpus(records, "bulk");
    index_ = build_index(corpus_).index;
    for (const auto& a : corpus_.artifacts()) {
      ids_.push_back(a.id);
      vectors_.push_back(oracle::embed(a.text));
    }
  }
  Corpus corpus_ = ingest_corpus({make_artifact("x", "u", "placeholder")}, "x");
  VectorIndex index_;
  std::vector<std::string> ids_;
  std::vector<std::vector<double>> vectors_;
};

TEST_F(QueryTopK, ZeroK) { EXPECT_TRUE(query_top_k(index_, embed_text("anything"), 0).empty()); }

TEST_F(QueryTopK, SingletonScope) {
  const std::vector<std::string> scope{"bulk-000042"};
  const auto r = query_top_k(index_, embed_text("billing refund"), 8, std::span<const std::string>(scope));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].id, "bulk-000042");
}

TEST_F(QueryTopK, MatchesLinearScanOracle) {
  std::mt19937_64 rng(17);
  const auto questions = synth::questions(500, 3);
  for (std::size_t q = 0; q < 1000; ++q) {
    const std::string text = q < questions.size() ? questions[q].text : corpus_.artifacts()[rng() % 1000].text;
    const auto got = query_top_k(index_, embed_text(text), 8);
    const auto want = oracle::linear_scan(ids_, vectors_, oracle::embed(text), 8);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      ASSERT_EQ(got[i].id, want[i].id) << "query " << q << " rank " << i;
      ASSERT_NEAR(got[i].score, want[i].score, 1e-9);
    }
  }
}

TEST_F(QueryTopK, LargeKReturnsWholeScopeSorted) {
  std::vector<std::string> scope(ids_.begin(), ids_.begin() + 20);
  const auto r = query_top_k(index_, embed_text("sync offline"), 100, std::span<const std::string>(scope));
  ASSERT_EQ(r.size(), 20u);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_TRUE(ranks_before(r[i - 1], r[i]) || r[i - 1] == r[i]);
  std::set<std::string> got;
  for (const auto& s : r) got.insert(s.id);
  EXPECT_EQ(got, std::set<std::string>(scope.begin(), scope.end()));
}

TEST_F(QueryTopK, TiesBrokenByIdAscending) {
  const auto c = ingest_corpus({make_artifact("b", "u", "same words"), make_artifact("a", "u", "same words"),
                                make_artifact("c", "u", "same words")},
                               "t");
  const auto idx = build_index(c).index;
  const auto r = query_top_k(idx, embed_text("same words"), 3);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].id, "a");
  EXPECT_EQ(r[1].id, "b");
  EXPECT_EQ(r[2].id, "c");
}

TEST_F(QueryTopK, UnknownScopeIdRejected) {
  const std::vector<std::string> scope{"missing"};
  EXPECT_THROW(query_top_k(index_, embed_text("x"), 3, std::span<const std::string>(scope)), Error);
}

TEST_F(QueryTopK, DimensionMismatch) {
  try {
    query_top_k(index_, EmbeddingVector{std::vector<double>(4, 0.5)}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST_F(QueryTopK, SidecarRoundTrip) {
  testing_support::TempDir dir;
  save_index(dir.path() / "index.bin", index_, "bulk");
  std::string cid;
  const auto loaded = load_index(dir.path() / "index.bin", &cid);
  EXPECT_EQ(cid, "bulk");
  EXPECT_EQ(loaded, index_);
}

}  // namespace
}  // namespace vocp

namespace vocp {
namespace {

TEST(RankingScore, UlpNoiseTies) {
  EXPECT_NE(0.1 + 0.2, 0.3);
  EXPECT_EQ(ranking_score(0.1 + 0.2), ranking_score(0.3));
  EXPECT_LT(ranking_score(0.3), ranking_score(0.300000000002));
  EXPECT_EQ(ranking_score(-1.0), -1.0);
}

}  // namespace
}  // namespace vocp
