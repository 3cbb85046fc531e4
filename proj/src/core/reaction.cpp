#include "core/reaction.hpp"

#include <array>

#include "core/error.hpp"
#include "core/lexicon.hpp"
#include "core/text.hpp"

namespace vocp {
namespace {

constexpr std::array<std::string_view, 5> kStimulusKinds = {
    "feature_idea", "mockup_text", "problem_statement", "social_post", "landing_copy"};
constexpr std::array<std::string_view, 4> kStances = {"supportive", "critical", "mixed",
                                                      "no_evidence"};

std::string overall_note(const std::vector<FacetReaction>& facets) {
  std::array<std::size_t, 4> counts{};
  for (const auto& f : facets) ++counts[static_cast<std::size_t>(f.stance)];
  const std::size_t with_evidence = facets.size() - counts[3];
  std::string note = std::to_string(with_evidence) + " of " + std::to_string(facets.size()) +
                     " facets have evidence (" + std::to_string(counts[0]) + " supportive, " +
                     std::to_string(counts[1]) + " critical, " + std::to_string(counts[2]) +
                     " mixed)";
  if (counts[3] > 0) {
    note += "; " + std::to_string(counts[3]) + " without evidence";
  }
  note += ".";
  return note;
}

}  // namespace

std::string_view stimulus_kind_name(StimulusKind kind) {
  return kStimulusKinds[static_cast<std::size_t>(kind)];
}

std::optional<StimulusKind> parse_stimulus_kind(std::string_view name) {
  for (std::size_t i = 0; i < kStimulusKinds.size(); ++i) {
    if (kStimulusKinds[i] == name) return static_cast<StimulusKind>(i);
  }
  return std::nullopt;
}

std::string_view stance_name(Stance stance) { return kStances[static_cast<std::size_t>(stance)]; }

std::optional<Stance> parse_stance(std::string_view name) {
  for (std::size_t i = 0; i < kStances.size(); ++i) {
    if (kStances[i] == name) return static_cast<Stance>(i);
  }
  return std::nullopt;
}

std::vector<std::string> extract_facets(const ReactionStimulus& stimulus) {
  auto facets = split_sentences(stimulus.content);
  if (facets.empty()) throw Error(ErrorCode::kNoFacets, "stimulus content yields no facets");
  return facets;
}

double text_polarity(std::string_view text) {
  int sum = 0;
  int matched = 0;
  for (const auto& word : tokenize_words(text)) {
    const int p = lexicon_polarity(word);
    if (p != 0) {
      sum += p;
      ++matched;
    }
  }
  return matched == 0 ? 0.0 : static_cast<double>(sum) / matched;
}

Stance stance_for(double polarity) {
  if (polarity > kStanceDeadBand) return Stance::kSupportive;
  if (polarity < -kStanceDeadBand) return Stance::kCritical;
  return Stance::kMixed;
}

ReactionReport simulate_reaction(const PersonaContext& context, const ReactionStimulus& stimulus,
                                 const TurnConfig& config, Timestamp now) {
  ReactionReport report;
  const auto facets = extract_facets(stimulus);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    FacetReaction r{facets[i], Stance::kNoEvidence, 0.0, {}};
    const auto bundle = retrieve_evidence(context, facets[i], config.k, now,
                                          "facet-" + std::to_string(i + 1));
    if (sufficiency_gate(bundle, config.tau_evidence, config.n_min) == GateOutcome::kProceed) {
      const auto qualifying = qualifying_items(bundle, config.tau_evidence);
      double total = 0.0;
      for (const EvidenceItem* item : qualifying) {
        total += text_polarity(item->artifact.retrievable_text());
        r.citations.push_back(item->artifact.id);
      }
      r.polarity = total / static_cast<double>(qualifying.size());
      r.stance = stance_for(r.polarity);
    }
    report.facets.push_back(std::move(r));
  }
  report.overall_note = overall_note(report.facets);
  return report;
}

}  // namespace vocp
