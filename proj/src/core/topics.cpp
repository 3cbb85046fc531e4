#include "core/topics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "core/error.hpp"
#include "core/text.hpp"

namespace vocp {
namespace {

std::string cluster_name(std::size_t ordinal) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "topic-%03zu", ordinal);
  return buf;
}

void renormalize(const std::vector<double>& sum, EmbeddingVector& centroid) {
  double norm_sq = 0.0;
  for (double x : sum) norm_sq += x * x;
  const double norm = std::sqrt(norm_sq);
  centroid.values.resize(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) centroid.values[i] = norm > 0.0 ? sum[i] / norm : 0.0;
}

}  // namespace

std::vector<TopicCluster> cluster_topics(const VectorIndex& index, double tau_cluster,
                                         std::vector<ClusterAssignment>* trace) {
  if (index.empty()) throw Error(ErrorCode::kEmptyIndex, "cannot cluster an empty index");
  if (!(tau_cluster > 0.0 && tau_cluster < 1.0)) {
    throw Error(ErrorCode::kBadConfig, "tau_cluster must lie in (0, 1)");
  }

  std::vector<std::string> order = index.ids();
  std::sort(order.begin(), order.end());

  std::vector<TopicCluster> clusters;
  std::vector<std::vector<double>> sums;
  for (const auto& id : order) {
    const EmbeddingVector& v = index.vector_of(id);
    std::ptrdiff_t best = -1;
    double best_sim = 0.0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      const double sim = cosine_similarity(v, clusters[c].centroid);
      if (sim >= tau_cluster && (best < 0 || sim > best_sim)) {
        best = static_cast<std::ptrdiff_t>(c);
        best_sim = sim;
      }
    }
    ClusterAssignment step{id, 0, 1.0, best < 0};
    if (best < 0) {
      clusters.push_back({cluster_name(clusters.size() + 1), v, {}, {}});
      sums.push_back(v.values);
      step.cluster_index = clusters.size() - 1;
    } else {
      const auto c = static_cast<std::size_t>(best);
      for (std::size_t i = 0; i < v.values.size(); ++i) sums[c][i] += v.values[i];
      renormalize(sums[c], clusters[c].centroid);
      step.cluster_index = c;
      step.similarity = best_sim;
    }
    clusters[step.cluster_index].member_ids.push_back(id);
    if (trace != nullptr) trace->push_back(std::move(step));
  }
  return clusters;
}

TermStats::TermStats(const Corpus& corpus) {
  for (const auto& a : corpus.artifacts()) {
    const auto words = content_word_set(a.retrievable_text());
    std::vector<std::string> terms(words.begin(), words.end());
    for (const auto& w : terms) ++df_[w];
    terms_by_artifact_.emplace(a.id, std::move(terms));
  }
}

std::size_t TermStats::document_frequency(const std::string& term) const {
  const auto it = df_.find(term);
  return it == df_.end() ? 0 : it->second;
}

const std::vector<std::string>& TermStats::terms_of(const std::string& artifact_id) const {
  const auto it = terms_by_artifact_.find(artifact_id);
  if (it == terms_by_artifact_.end()) {
    throw Error(ErrorCode::kUnknownArtifact, "artifact '" + artifact_id + "' not in corpus");
  }
  return it->second;
}

std::vector<std::string> label_cluster(const TopicCluster& cluster, const TermStats& stats) {
  std::map<std::string, std::size_t> df_in;
  for (const auto& id : cluster.member_ids) {
    for (const auto& term : stats.terms_of(id)) ++df_in[term];
  }
  struct Ranked {
    std::string term;
    std::size_t in;
    std::size_t rest;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(df_in.size());
  for (const auto& [term, in] : df_in) {
    ranked.push_back({term, in, stats.document_frequency(term) - in});
  }
  // in_a / (1 + rest_a) > in_b / (1 + rest_b), compared exactly in integers.
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    const auto lhs = a.in * (1 + b.rest);
    const auto rhs = b.in * (1 + a.rest);
    if (lhs != rhs) return lhs > rhs;
    return a.term < b.term;
  });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ranked.size() && i < kMaxLabelTerms; ++i) {
    labels.push_back(ranked[i].term);
  }
  return labels;
}

std::vector<std::string> label_cluster(const TopicCluster& cluster, const Corpus& corpus) {
  return label_cluster(cluster, TermStats(corpus));
}

void label_clusters(std::vector<TopicCluster>& clusters, const Corpus& corpus) {
  const TermStats stats(corpus);
  for (auto& cluster : clusters) cluster.label_terms = label_cluster(cluster, stats);
}

}  // namespace vocp
