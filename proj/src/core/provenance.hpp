#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "core/corpus.hpp"
#include "core/persona.hpp"
#include "core/timestamp.hpp"
#include "core/topics.hpp"

namespace vocp {

/// Describes the generation backend behind a persona.
struct ModelInfo {
  std::string backend;
  std::vector<std::string> risks;
};

/// Risks every card lists; deployers append their own.
std::vector<std::string> baseline_risks();

struct ProvenanceCard {
  struct DataProvenance {
    std::vector<std::string> channels;
    std::vector<std::string> platforms;
    std::vector<std::string> collection_methods;
    TemporalRange temporal_range;
    bool operator==(const DataProvenance&) const = default;
  };
  struct ModelSpecifications {
    std::string backend;
    std::vector<std::string> risks;
    bool operator==(const ModelSpecifications&) const = default;
  };
  struct SegmentMetrics {
    std::size_t user_count = 0;
    std::size_t message_count = 0;
    bool operator==(const SegmentMetrics&) const = default;
  };
  struct TopicCoverage {
    std::vector<std::pair<std::string, std::size_t>> covered;
    std::vector<std::string> gaps;
    bool operator==(const TopicCoverage&) const = default;
  };

  std::string persona_id;
  DataProvenance data_provenance;
  ModelSpecifications model_specifications;
  SegmentMetrics segment_metrics;
  TopicCoverage topic_coverage;
  Timestamp generated_at{};

  bool operator==(const ProvenanceCard&) const = default;
};

/// Builds a card from ground data: every count is recomputed from the
/// persona's member artifacts, nothing is copied from the persona record.
/// Throws Error{kCorpusMismatch} when the persona does not belong to `corpus`.
ProvenanceCard build_card(const PersonaSegment& persona, const std::vector<TopicCluster>& clusters,
                          const Corpus& corpus, const ModelInfo& model_info,
                          std::size_t min_evidence, Timestamp generated_at);

enum class CardFormat { kJson, kMarkdown };

std::string render_card(const ProvenanceCard& card, CardFormat format);
ProvenanceCard parse_card_json(const std::string& text);

}  // namespace vocp
