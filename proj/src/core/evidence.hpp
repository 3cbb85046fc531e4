#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/corpus.hpp"
#include "core/persona.hpp"
#include "core/timestamp.hpp"
#include "core/vector_index.hpp"

namespace vocp {

enum class InteractionMode { kInterview, kReaction };

std::string_view mode_name(InteractionMode mode);
std::optional<InteractionMode> parse_mode(std::string_view name);

/// Per-turn retrieval and gating thresholds.
struct TurnConfig {
  std::size_t k = 8;
  double tau_evidence = 0.35;
  std::size_t n_min = 3;
  double tau_ground = 0.74;
};

struct EvidenceItem {
  VocArtifact artifact;
  double score = 0.0;
};

/// Ranked artifacts retrieved for one turn (score desc, id asc).
struct EvidenceBundle {
  std::string bundle_id;
  std::vector<EvidenceItem> items;
  std::string query_echo;
  Timestamp retrieved_at{};

  bool contains(std::string_view artifact_id) const;
  const EvidenceItem* find(std::string_view artifact_id) const;
  std::vector<ScoredId> ids_scores() const;
};

/// Everything a turn needs to retrieve within one persona's evidence.
struct PersonaContext {
  std::shared_ptr<const Corpus> corpus;
  std::shared_ptr<const VectorIndex> index;
  PersonaSegment persona;
  std::vector<std::string> member_ids;  // id ascending
  /// Coverage labels the persona can speak to, with their embeddings.
  std::vector<std::pair<std::string, EmbeddingVector>> covered_labels;

  static PersonaContext make(std::shared_ptr<const Corpus> corpus,
                             std::shared_ptr<const VectorIndex> index, PersonaSegment persona,
                             const std::vector<TopicCluster>& clusters);

  bool is_member(std::string_view artifact_id) const;
};

EvidenceBundle retrieve_evidence(const PersonaContext& context, std::string_view query,
                                 std::size_t k, Timestamp now, std::string bundle_id);

enum class GateOutcome { kProceed, kAbstain };

/// Proceed iff at least n_min items score >= tau_evidence.
GateOutcome sufficiency_gate(const EvidenceBundle& bundle, double tau_evidence, std::size_t n_min);

/// Items that clear tau_evidence, in bundle order.
std::vector<const EvidenceItem*> qualifying_items(const EvidenceBundle& bundle, double tau_evidence);

}  // namespace vocp
