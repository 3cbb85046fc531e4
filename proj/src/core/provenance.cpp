#include "core/provenance.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "core/error.hpp"
#include "core/serialize.hpp"

namespace vocp {
namespace {

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "none recorded";
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

std::vector<std::string> baseline_risks() {
  return {
      "Extrapolation beyond evidence: responses may generalise past what the cited artifacts say.",
      "Sampling bias of VoC channels: vocal, online and complaint-prone users are over-represented.",
      "Non-representativeness: a segment reflects the authors in this corpus, not a market population.",
  };
}

ProvenanceCard build_card(const PersonaSegment& persona, const std::vector<TopicCluster>& clusters,
                          const Corpus& corpus, const ModelInfo& model_info,
                          std::size_t min_evidence, Timestamp generated_at) {
  if (persona.persona_id.rfind(corpus.corpus_id() + "-", 0) != 0) {
    throw Error(ErrorCode::kCorpusMismatch, "persona '" + persona.persona_id +
                                                "' was not derived from corpus '" +
                                                corpus.corpus_id() + "'");
  }
  const auto members = persona_members(persona, clusters);

  ProvenanceCard card;
  card.persona_id = persona.persona_id;
  card.generated_at = generated_at;

  std::set<std::string> channels;
  std::unordered_set<std::string> authors;
  bool first = true;
  for (const auto& id : members) {
    const VocArtifact* a = corpus.find(id);
    if (a == nullptr) {
      throw Error(ErrorCode::kCorpusMismatch,
                  "member '" + id + "' missing from corpus '" + corpus.corpus_id() + "'");
    }
    channels.insert(a->channel);
    authors.insert(a->author_id);
    auto& range = card.data_provenance.temporal_range;
    if (first || a->created_at < range.min) range.min = a->created_at;
    if (first || a->created_at > range.max) range.max = a->created_at;
    first = false;
  }
  card.data_provenance.channels.assign(channels.begin(), channels.end());
  card.data_provenance.platforms = corpus.meta().platforms;
  card.data_provenance.collection_methods = corpus.meta().collection_methods;

  card.model_specifications.backend = model_info.backend;
  card.model_specifications.risks = model_info.risks;

  card.segment_metrics = {authors.size(), members.size()};

  const auto coverage = compute_coverage(persona.summary_terms, members, corpus);
  for (const auto& [label, count] : coverage) {
    if (count >= min_evidence) card.topic_coverage.covered.emplace_back(label, count);
  }
  std::stable_sort(card.topic_coverage.covered.begin(), card.topic_coverage.covered.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  card.topic_coverage.gaps = coverage_gaps(coverage, min_evidence);
  return card;
}

std::string render_card(const ProvenanceCard& card, CardFormat format) {
  if (format == CardFormat::kJson) return to_json(card).dump(2) + "\n";

  std::ostringstream md;
  md << "# Persona Provenance Card: " << card.persona_id << "\n\n";
  md << "Generated at " << format_rfc3339(card.generated_at) << ".\n\n";

  const auto& dp = card.data_provenance;
  md << "## Data Provenance\n\n";
  md << "- Channels: " << join(dp.channels) << "\n";
  md << "- Platforms: " << join(dp.platforms) << "\n";
  md << "- Collection methods: " << join(dp.collection_methods) << "\n";
  md << "- Temporal range: " << format_rfc3339(dp.temporal_range.min) << " to "
     << format_rfc3339(dp.temporal_range.max) << "\n\n";

  md << "## Model Specifications\n\n";
  md << "- Backend: " << card.model_specifications.backend << "\n";
  md << "- Known risks:\n";
  for (const auto& risk : card.model_specifications.risks) md << "  - " << risk << "\n";
  md << "\n";

  md << "## Segment Metrics\n\n";
  md << "- Users: " << card.segment_metrics.user_count << "\n";
  md << "- Messages: " << card.segment_metrics.message_count << "\n\n";

  md << "## Topic Coverage\n\n";
  if (card.topic_coverage.covered.empty()) {
    md << "No topic reaches the evidence threshold.\n\n";
  } else {
    md << "| Topic | Artifacts |\n|---|---|\n";
    for (const auto& [label, count] : card.topic_coverage.covered) {
      md << "| " << label << " | " << count << " |\n";
    }
    md << "\n";
  }
  if (card.topic_coverage.gaps.empty()) {
    md << "No documented gaps.\n";
  } else {
    md << "Documented gaps: " << join(card.topic_coverage.gaps) << ".\n";
  }
  return md.str();
}

ProvenanceCard parse_card_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kBadRequest, "card is not valid JSON");
  return card_from_json(j);
}

}  // namespace vocp
