#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace vocp {

inline constexpr std::size_t kEmbeddingDim = 256;

struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dimension() const { return values.size(); }
  bool operator==(const EmbeddingVector&) const = default;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// Reference embedder: lowercased character trigrams within each word
/// (UTF-8 aware) hashed with FNV-1a into kEmbeddingDim buckets,
/// term-frequency weighted, L2 normalised. Words shorter than three
/// characters contribute a single gram made of the whole word; text with no
/// word characters is treated as one word.
/// Throws Error{kEmptyText} for blank input.
EmbeddingVector embed_text(std::string_view text);

/// Bucket indices touched by embed_text(text); exposed for test oracles.
std::vector<std::size_t> trigram_buckets(std::string_view text);

/// Standard cosine, clamped to [-1, 1]; 0 when either vector is all zeros.
/// Throws Error{kDimensionMismatch}.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

}  // namespace vocp
