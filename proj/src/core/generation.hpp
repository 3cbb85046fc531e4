#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/evidence.hpp"
#include "core/persona.hpp"

namespace vocp {

inline constexpr std::string_view kFirstPersonPrefix = "From my experience: ";
inline constexpr std::size_t kMaxExtractiveSentences = 3;

struct GenerationRequest {
  PersonaSegment persona;
  std::string question;
  EvidenceBundle evidence;
  InteractionMode mode = InteractionMode::kInterview;
};

struct DraftSentence {
  std::string text;
  std::string source_id;
  bool operator==(const DraftSentence&) const = default;
};

struct DraftResponse {
  /// Every source_id here belongs to the request's evidence bundle.
  std::vector<DraftSentence> sentences;
  /// Backend output that cited ids outside the bundle; never shown as claims.
  std::vector<DraftSentence> rejected;
};

/// Contract for anything that turns retrieved evidence into persona sentences.
class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;
  virtual DraftResponse generate(const GenerationRequest& request) const = 0;
  /// Free-text model descriptor, surfaced in provenance cards.
  virtual std::string descriptor() const = 0;
};

/// Composes a response purely from evidence sentences: the top three by
/// cosine to the question (score desc, artifact id asc, position asc), each
/// wrapped in the first-person template.
/// Throws Error{kNoUsableSentence} when no evidence sentence survives splitting.
DraftResponse generate_extractive(const GenerationRequest& request);

class ExtractiveBackend final : public GenerationBackend {
 public:
  DraftResponse generate(const GenerationRequest& request) const override {
    return generate_extractive(request);
  }
  std::string descriptor() const override { return "extractive-reference/1.0"; }
};

}  // namespace vocp
