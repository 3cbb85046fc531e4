#include "core/grounding.hpp"

#include <algorithm>

#include "core/embedding.hpp"
#include "core/error.hpp"
#include "core/text.hpp"

namespace vocp {

std::vector<std::string> segment_claims(std::string_view text) { return split_sentences(text); }

double jaccard_content_overlap(std::string_view a, std::string_view b) {
  const auto wa = content_word_set(a);
  const auto wb = content_word_set(b);
  if (wa.empty() && wb.empty()) return 0.0;
  std::size_t shared = 0;
  for (const auto& w : wa) shared += wb.contains(w) ? 1 : 0;
  return static_cast<double>(shared) / static_cast<double>(wa.size() + wb.size() - shared);
}

double support_score(std::string_view claim, const VocArtifact& artifact) {
  const std::string text = artifact.retrievable_text();
  const double lexical = jaccard_content_overlap(claim, text);
  const double semantic = (cosine_similarity(embed_text(claim), embed_text(text)) + 1.0) / 2.0;
  return std::clamp(std::max(lexical, semantic), 0.0, 1.0);
}

VerificationReport verify_response(const PersonaResponse& response, const EvidenceBundle& bundle,
                                   double tau_ground) {
  VerificationReport report;
  for (const auto& claim : response.claims) {
    ClaimVerification v{claim.text, 0.0, false, {}};
    for (const auto& id : claim.citations) {
      const EvidenceItem* item = bundle.find(id);
      if (item == nullptr) {
        throw Error(ErrorCode::kUnknownCitation,
                    "claim cites '" + id + "' which is not in bundle '" + bundle.bundle_id + "'");
      }
      const double s = support_score(claim.text, item->artifact);
      if (v.best_artifact_id.empty() || s > v.max_support) {
        v.max_support = s;
        v.best_artifact_id = id;
      }
    }
    v.grounded = v.max_support >= tau_ground;
    report.pass = report.pass && v.grounded;
    report.claims.push_back(std::move(v));
  }
  return report;
}

}  // namespace vocp
