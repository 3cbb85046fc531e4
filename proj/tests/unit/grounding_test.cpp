#include <gtest/gtest.h>

#include "core/conversation.hpp"
#include "core/error.hpp"
#include "core/grounding.hpp"
#include "fixture.hpp"
#include "oracles.hpp"
#include "synth/synth.hpp"

namespace vocp {
namespace {

using testing_support::make_artifact;

EvidenceBundle bundle_of(const std::vector<VocArtifact>& artifacts) {
  EvidenceBundle b;
  b.bundle_id = "b1";
  for (const auto& a : artifacts) b.items.push_back({a, 0.5});
  return b;
}

PersonaResponse answered(std::vector<Claim> claims) {
  PersonaResponse r;
  r.kind = ResponseKind::kAnswered;
  r.claims = std::move(claims);
  r.bundle_ref = "b1";
  return r;
}

TEST(SegmentClaims, SameRulesAsSplitter) {
  EXPECT_EQ(segment_claims("I use it daily. It crashes!  Why?"),
            (std::vector<std::string>{"I use it daily.", "It crashes!", "Why?"}));
  EXPECT_EQ(segment_claims("Version 2.5 works. ok"), (std::vector<std::string>{"Version 2.5 works."}));
  EXPECT_TRUE(segment_claims("   ").empty());
}

TEST(Jaccard, HandComputed) {
  EXPECT_DOUBLE_EQ(jaccard_content_overlap("battery drains fast", "battery fast charging"), 2.0 / 4.0);
  EXPECT_DOUBLE_EQ(jaccard_content_overlap("battery drains fast", "the battery"), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(jaccard_content_overlap("Battery, drains!", "drains battery"), 1.0);
  EXPECT_DOUBLE_EQ(jaccard_content_overlap("the and of", "it is"), 0.0);
}

TEST(SupportScore, IdentityIsOne) {
  const auto a = make_artifact("a1", "u", "The sync conflict wiped my edits.");
  EXPECT_NEAR(support_score("The sync conflict wiped my edits.", a), 1.0, 1e-12);
}

TEST(SupportScore, OrthogonalDisjointIsHalf) {
  const auto texts = oracle::bucket_disjoint_texts(2, 3, 99);
  ASSERT_EQ(oracle::dot(oracle::embed(texts[0]), oracle::embed(texts[1])), 0.0);
  const auto a = make_artifact("a1", "u", texts[1]);
  EXPECT_DOUBLE_EQ(support_score(texts[0], a), 0.5);
}

TEST(SupportScore, LexicalTermWinsWhenLarger) {
  const auto a = make_artifact("a1", "u", "refund invoice");
  const double s = support_score("invoice refund", a);
  EXPECT_DOUBLE_EQ(s, 1.0);
}

TEST(Verify, AbstainedResponseIsVacuouslyGrounded) {
  PersonaResponse r;
  r.abstain_note = "note";
  const auto report = verify_response(r, bundle_of({}), 0.74);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.claims.empty());
}

TEST(Verify, UnknownCitation) {
  const auto bundle = bundle_of({make_artifact("a1", "u", "Battery dies.")});
  try {
    verify_response(answered({{"Battery dies.", {"a9"}, 0}}), bundle, 0.74);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownCitation);
  }
}

TEST(Verify, ScoresAgainstOwnCitationsOnly) {
  const auto bundle = bundle_of({make_artifact("a1", "u", "Battery dies overnight."),
                                 make_artifact("a2", "u", "Invoices arrive late.")});
  const auto report = verify_response(answered({{"Battery dies overnight.", {"a2"}, 0}}), bundle, 0.74);
  ASSERT_EQ(report.claims.size(), 1u);
  EXPECT_EQ(report.claims[0].best_artifact_id, "a2");
  EXPECT_LT(report.claims[0].max_support, 0.74);
  EXPECT_FALSE(report.pass);
}

TEST(Verify, ExtractiveAnswersPassAndInjectedClaimsFail) {
  auto fx = testing_support::make_fixture_engine();
  const auto fabricated = synth::fabricated_claims(60, 3);
  const auto tau = fx->engine->config().thresholds.tau_ground;
  std::size_t answered_turns = 0;
  std::size_t f = 0;
  for (const auto& q : synth::questions(30, 11)) {
    if (q.gap) continue;
    const auto& pid = fx->persona_for_topic.at(q.topic);
    const auto ctx = fx->engine->persona_context(pid);
    Session session("s", pid, InteractionMode::kInterview, {});
    TurnTrace trace;
    auto response = answer_turn(session, q.text, *ctx, ExtractiveBackend{}, fx->engine->config().thresholds.turn_config(),
                                {}, &trace);
    if (response.kind != ResponseKind::kAnswered) continue;
    ++answered_turns;
    EXPECT_EQ(trace.verification.redacted_count, 0u) << q.text;
    EXPECT_TRUE(verify_response(response, trace.bundle, tau).pass) << q.text;

    response.claims.push_back({fabricated[f++ % fabricated.size()], {trace.bundle.items.front().artifact.id}, 0});
    const auto report = verify_response(response, trace.bundle, tau);
    EXPECT_FALSE(report.pass) << response.claims.back().text;
    EXPECT_FALSE(report.claims.back().grounded);
  }
  EXPECT_GE(answered_turns, 25u);
}

TEST(Verify, RaisingTauNeverAddsGroundedClaims) {
  const auto bundle = bundle_of({make_artifact("a1", "u", "Sync conflicts wipe my offline edits."),
                                 make_artifact("a2", "u", "The invoice showed the wrong amount.")});
  const auto response = answered({{"Sync conflicts wipe my offline edits.", {"a1"}, 0},
                                   {"My offline edits vanish after sync.", {"a1"}, 0},
                                   {"The invoice amount was wrong.", {"a2"}, 0},
                                   {"Dogs enjoy long walks.", {"a1", "a2"}, 0}});
  std::vector<bool> previous(response.claims.size(), true);
  for (double tau = 0.0; tau <= 1.0; tau += 0.05) {
    const auto report = verify_response(response, bundle, tau);
    for (std::size_t i = 0; i < report.claims.size(); ++i) {
      EXPECT_FALSE(report.claims[i].grounded && !previous[i]) << "tau " << tau;
      previous[i] = report.claims[i].grounded;
    }
  }
}

}  // namespace
}  // namespace vocp
