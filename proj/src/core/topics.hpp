#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/embedding.hpp"
#include "core/vector_index.hpp"

namespace vocp {

inline constexpr std::size_t kMaxLabelTerms = 5;

struct TopicCluster {
  std::string cluster_id;
  EmbeddingVector centroid;
  std::vector<std::string> member_ids;  // assignment order, i.e. id ascending
  std::vector<std::string> label_terms;
  bool operator==(const TopicCluster&) const = default;
};

/// One step of the leader pass, recorded for replay checks.
struct ClusterAssignment {
  std::string artifact_id;
  std::size_t cluster_index = 0;
  double similarity = 1.0;  // against the centroid at assignment time; 1 for seeds
  bool opened_cluster = false;
};

/// Leader clustering in artifact-id order. Each artifact joins the most
/// similar existing cluster whose centroid is at least `tau_cluster` away
/// (earliest cluster on exact ties) or seeds a new one. Centroids are the
/// renormalised running mean of members. Labels are left empty.
/// Throws Error{kEmptyIndex} or Error{kBadConfig} when tau is outside (0, 1).
std::vector<TopicCluster> cluster_topics(const VectorIndex& index, double tau_cluster,
                                         std::vector<ClusterAssignment>* trace = nullptr);

/// Document frequencies of content words over a corpus.
class TermStats {
 public:
  explicit TermStats(const Corpus& corpus);
  std::size_t document_frequency(const std::string& term) const;
  const std::vector<std::string>& terms_of(const std::string& artifact_id) const;

 private:
  std::map<std::string, std::size_t> df_;
  std::map<std::string, std::vector<std::string>> terms_by_artifact_;
};

/// Top content words ranked by df_in / (1 + df_rest), alphabetical on ties.
std::vector<std::string> label_cluster(const TopicCluster& cluster, const Corpus& corpus);
std::vector<std::string> label_cluster(const TopicCluster& cluster, const TermStats& stats);

/// Fills label_terms for every cluster.
void label_clusters(std::vector<TopicCluster>& clusters, const Corpus& corpus);

}  // namespace vocp
