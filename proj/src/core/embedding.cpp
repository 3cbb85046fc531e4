#include "core/embedding.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/text.hpp"

namespace vocp {
namespace {

std::string normalize(std::string_view text) {
  const std::string lowered = ascii_lower(trim(text));
  std::string out;
  out.reserve(lowered.size());
  bool in_space = false;
  for (char c : lowered) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  return out;
}

// Byte offsets of each UTF-8 code point start, plus the end offset.
std::vector<std::size_t> codepoint_offsets(const std::string& s) {
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) offsets.push_back(i);
  }
  offsets.push_back(s.size());
  return offsets;
}

bool is_separator(unsigned char c) { return c < 0x80 && !std::isalnum(c); }

// Emits the trigrams of one word, or the whole word when it is shorter.
template <typename Fn>
void word_grams(std::string_view word, Fn& fn) {
  const auto offsets = codepoint_offsets(std::string(word));
  const std::size_t n_chars = offsets.size() - 1;
  if (n_chars < 3) {
    fn(word);
    return;
  }
  for (std::size_t i = 0; i + 3 <= n_chars; ++i) fn(word.substr(offsets[i], offsets[i + 3] - offsets[i]));
}

// Grams are taken inside words (runs of ASCII alphanumerics and non-ASCII
// code points). Text with no word characters falls back to its own trigrams.
template <typename Fn>
void for_each_gram(std::string_view text, Fn&& fn) {
  const std::string norm = normalize(text);
  if (norm.empty()) throw Error(ErrorCode::kEmptyText, "cannot embed empty text");
  const std::string_view view(norm);
  bool any_word = false;
  std::size_t i = 0;
  while (i < view.size()) {
    if (is_separator(static_cast<unsigned char>(view[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < view.size() && !is_separator(static_cast<unsigned char>(view[j]))) ++j;
    word_grams(view.substr(i, j - i), fn);
    any_word = true;
    i = j;
  }
  if (!any_word) word_grams(view, fn);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

EmbeddingVector embed_text(std::string_view text) {
  EmbeddingVector v{std::vector<double>(kEmbeddingDim, 0.0)};
  for_each_gram(text, [&v](std::string_view gram) { v.values[fnv1a64(gram) % kEmbeddingDim] += 1.0; });
  double norm_sq = 0.0;
  for (double x : v.values) norm_sq += x * x;
  const double norm = std::sqrt(norm_sq);
  for (double& x : v.values) x /= norm;
  return v;
}

std::vector<std::size_t> trigram_buckets(std::string_view text) {
  std::vector<std::size_t> buckets;
  for_each_gram(text, [&buckets](std::string_view gram) { buckets.push_back(fnv1a64(gram) % kEmbeddingDim); });
  std::sort(buckets.begin(), buckets.end());
  buckets.erase(std::unique(buckets.begin(), buckets.end()), buckets.end());
  return buckets;
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                    std::to_string(b.dimension()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    na += a.values[i] * a.values[i];
    nb += b.values[i] * b.values[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

}  // namespace vocp
