#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "core/artifact.hpp"
#include "core/evidence.hpp"
#include "core/response.hpp"

namespace vocp {

/// Claim segmentation; identical rules to the generation splitter.
std::vector<std::string> segment_claims(std::string_view text);

double jaccard_content_overlap(std::string_view a, std::string_view b);

/// max(Jaccard of content-word sets, (cosine + 1) / 2). An orthogonal,
/// word-disjoint claim therefore scores 0.5.
double support_score(std::string_view claim, const VocArtifact& artifact);

struct ClaimVerification {
  std::string claim_text;
  double max_support = 0.0;
  bool grounded = false;
  std::string best_artifact_id;
  bool operator==(const ClaimVerification&) const = default;
};

struct VerificationReport {
  std::vector<ClaimVerification> claims;
  bool pass = true;
  std::size_t redacted_count = 0;
  bool operator==(const VerificationReport&) const = default;
};

/// Scores each claim against its own citations only (max over them).
/// Throws Error{kUnknownCitation} when a claim cites an id outside the bundle.
VerificationReport verify_response(const PersonaResponse& response, const EvidenceBundle& bundle,
                                   double tau_ground);

}  // namespace vocp
