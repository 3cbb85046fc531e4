#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/corpus.hpp"
#include "core/embedding.hpp"

namespace vocp {

struct ScoredId {
  std::string id;
  double score = 0.0;
  bool operator==(const ScoredId&) const = default;
};

/// Cosines are rounded to 12 decimal places before ranking, so that scores
/// equal in exact arithmetic but computed from different vectors tie exactly
/// and fall back to the id order.
inline double ranking_score(double cosine) { return std::round(cosine * 1e12) / 1e12; }

/// Ranking order used everywhere: score descending, id ascending.
inline bool ranks_before(const ScoredId& a, const ScoredId& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.id < b.id;
}

/// Sealed exact-scan index. Read-only after construction, safe to share.
class VectorIndex {
 public:
  VectorIndex() = default;
  VectorIndex(std::vector<std::string> ids, std::vector<EmbeddingVector> vectors);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t dimension() const { return dimension_; }
  const std::vector<std::string>& ids() const { return ids_; }
  const EmbeddingVector& vector(std::size_t row) const { return vectors_[row]; }
  std::optional<std::size_t> row_of(const std::string& id) const;
  const EmbeddingVector& vector_of(const std::string& id) const;

  bool operator==(const VectorIndex& o) const { return ids_ == o.ids_ && vectors_ == o.vectors_; }

 private:
  std::size_t dimension_ = kEmbeddingDim;
  std::vector<std::string> ids_;
  std::vector<EmbeddingVector> vectors_;
  std::unordered_map<std::string, std::size_t> row_by_id_;
};

struct IndexDiagnostic {
  std::string artifact_id;
  std::string message;
};

struct IndexBuildResult {
  VectorIndex index;
  std::vector<IndexDiagnostic> skipped;
};

/// Embeds every artifact once, in corpus order. Artifacts with blank text
/// are skipped with a diagnostic.
IndexBuildResult build_index(const Corpus& corpus);

/// Exact top-k by cosine within `scope` (whole index when absent).
/// Throws Error{kDimensionMismatch} or Error{kUnknownArtifact} for a scope id
/// that is not indexed.
std::vector<ScoredId> query_top_k(const VectorIndex& index, const EmbeddingVector& query,
                                  std::size_t k,
                                  std::optional<std::span<const std::string>> scope = std::nullopt);

/// Binary sidecar: magic, dimension, count, corpus id, then (id, D doubles) rows.
void save_index(const std::filesystem::path& path, const VectorIndex& index,
                const std::string& corpus_id);
VectorIndex load_index(const std::filesystem::path& path, std::string* corpus_id = nullptr);

}  // namespace vocp
