#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/evidence.hpp"

namespace vocp {

enum class StimulusKind { kFeatureIdea, kMockupText, kProblemStatement, kSocialPost, kLandingCopy };

std::string_view stimulus_kind_name(StimulusKind kind);
std::optional<StimulusKind> parse_stimulus_kind(std::string_view name);

/// A design stimulus; mockups arrive as textual descriptions.
struct ReactionStimulus {
  StimulusKind kind = StimulusKind::kFeatureIdea;
  std::string title;
  std::string content;
  bool operator==(const ReactionStimulus&) const = default;
};

enum class Stance { kSupportive, kCritical, kMixed, kNoEvidence };

std::string_view stance_name(Stance stance);
std::optional<Stance> parse_stance(std::string_view name);

inline constexpr double kStanceDeadBand = 0.1;

struct FacetReaction {
  std::string facet;
  Stance stance = Stance::kNoEvidence;
  double polarity = 0.0;
  std::vector<std::string> citations;
  bool operator==(const FacetReaction&) const = default;
};

struct ReactionReport {
  std::vector<FacetReaction> facets;
  std::string overall_note;
  bool operator==(const ReactionReport&) const = default;
};

/// One facet per sentence. Throws Error{kNoFacets}.
std::vector<std::string> extract_facets(const ReactionStimulus& stimulus);

/// Mean of +1/-1 lexicon hits over matched words; 0 when nothing matches.
double text_polarity(std::string_view text);

/// supportive above +0.1, critical below -0.1, mixed in between.
Stance stance_for(double polarity);

/// Per facet: retrieve within the persona, apply the interview sufficiency
/// gate, and score stance from the qualifying evidence.
ReactionReport simulate_reaction(const PersonaContext& context, const ReactionStimulus& stimulus,
                                 const TurnConfig& config, Timestamp now);

}  // namespace vocp
