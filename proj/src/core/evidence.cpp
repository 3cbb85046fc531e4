#include "core/evidence.hpp"

#include <algorithm>

#include "core/embedding.hpp"
#include "core/error.hpp"
#include "core/text.hpp"

namespace vocp {

std::string_view mode_name(InteractionMode mode) {
  return mode == InteractionMode::kInterview ? "interview" : "reaction";
}

std::optional<InteractionMode> parse_mode(std::string_view name) {
  if (name == "interview") return InteractionMode::kInterview;
  if (name == "reaction") return InteractionMode::kReaction;
  return std::nullopt;
}

bool EvidenceBundle::contains(std::string_view artifact_id) const {
  return find(artifact_id) != nullptr;
}

const EvidenceItem* EvidenceBundle::find(std::string_view artifact_id) const {
  for (const auto& item : items) {
    if (item.artifact.id == artifact_id) return &item;
  }
  return nullptr;
}

std::vector<ScoredId> EvidenceBundle::ids_scores() const {
  std::vector<ScoredId> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back({item.artifact.id, item.score});
  return out;
}

PersonaContext PersonaContext::make(std::shared_ptr<const Corpus> corpus,
                                    std::shared_ptr<const VectorIndex> index,
                                    PersonaSegment persona,
                                    const std::vector<TopicCluster>& clusters) {
  PersonaContext ctx;
  ctx.member_ids = persona_members(persona, clusters);
  for (const auto& id : ctx.member_ids) {
    if (corpus->find(id) == nullptr || !index->row_of(id)) {
      throw Error(ErrorCode::kCorpusMismatch,
                  "persona member '" + id + "' missing from corpus '" + corpus->corpus_id() + "'");
    }
  }
  for (const auto& [label, count] : persona.coverage) {
    if (count == 0 || label == kGeneralTopic) continue;
    if (std::find(persona.gaps.begin(), persona.gaps.end(), label) != persona.gaps.end()) continue;
    ctx.covered_labels.emplace_back(label, embed_text(label));
  }
  ctx.corpus = std::move(corpus);
  ctx.index = std::move(index);
  ctx.persona = std::move(persona);
  return ctx;
}

bool PersonaContext::is_member(std::string_view artifact_id) const {
  return std::binary_search(member_ids.begin(), member_ids.end(), artifact_id);
}

EvidenceBundle retrieve_evidence(const PersonaContext& context, std::string_view query,
                                 std::size_t k, Timestamp now, std::string bundle_id) {
  EvidenceBundle bundle;
  bundle.bundle_id = std::move(bundle_id);
  bundle.query_echo = std::string(query);
  bundle.retrieved_at = now;
  const auto hits = query_top_k(*context.index, embed_text(query), k,
                                std::span<const std::string>(context.member_ids));
  bundle.items.reserve(hits.size());
  for (const auto& hit : hits) bundle.items.push_back({context.corpus->at(hit.id), hit.score});
  return bundle;
}

GateOutcome sufficiency_gate(const EvidenceBundle& bundle, double tau_evidence, std::size_t n_min) {
  const auto qualifying = static_cast<std::size_t>(
      std::count_if(bundle.items.begin(), bundle.items.end(),
                    [tau_evidence](const EvidenceItem& item) { return item.score >= tau_evidence; }));
  return qualifying >= n_min ? GateOutcome::kProceed : GateOutcome::kAbstain;
}

std::vector<const EvidenceItem*> qualifying_items(const EvidenceBundle& bundle, double tau_evidence) {
  std::vector<const EvidenceItem*> out;
  for (const auto& item : bundle.items) {
    if (item.score >= tau_evidence) out.push_back(&item);
  }
  return out;
}

}  // namespace vocp
