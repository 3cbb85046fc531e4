#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/topics.hpp"

namespace vocp {

/// Coverage bucket for member artifacts that contain none of the label terms.
inline constexpr const char* kGeneralTopic = "general";

struct PersonaSegment {
  std::string persona_id;
  std::string name;
  std::vector<std::string> cluster_ids;
  std::vector<std::string> summary_terms;
  std::size_t user_count = 0;
  std::size_t message_count = 0;
  std::map<std::string, std::size_t> coverage;
  std::vector<std::string> gaps;
  bool operator==(const PersonaSegment&) const = default;
};

/// The topic label an artifact is counted under: the highest ranked summary
/// term among its content words, else kGeneralTopic.
std::string coverage_label(const std::vector<std::string>& summary_terms,
                           const std::set<std::string>& artifact_words);

/// Coverage map over the given artifacts. Every summary term is present
/// (possibly with 0); kGeneralTopic appears only when non-empty.
std::map<std::string, std::size_t> compute_coverage(const std::vector<std::string>& summary_terms,
                                                    const std::vector<std::string>& member_ids,
                                                    const Corpus& corpus);

std::vector<std::string> coverage_gaps(const std::map<std::string, std::size_t>& coverage,
                                       std::size_t min_evidence);

/// One persona per labelled cluster with at least `min_cluster_size` members.
/// Throws Error{kNoPersonas} when none qualifies.
std::vector<PersonaSegment> derive_personas(const std::vector<TopicCluster>& clusters,
                                            const Corpus& corpus, std::size_t min_cluster_size,
                                            std::size_t min_evidence);

std::size_t topic_coverage(const PersonaSegment& persona, const std::string& label);

/// Member artifact ids of a persona, id ascending.
std::vector<std::string> persona_members(const PersonaSegment& persona,
                                         const std::vector<TopicCluster>& clusters);

}  // namespace vocp
