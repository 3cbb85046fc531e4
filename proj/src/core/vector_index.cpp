#include "core/vector_index.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "core/error.hpp"

namespace vocp {
namespace {

constexpr char kMagic[8] = {'V', 'O', 'C', 'P', 'I', 'D', 'X', '1'};

template <typename T>
void write_pod(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
T read_pod(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof value);
  if (!in) throw Error(ErrorCode::kIo, "truncated index sidecar");
  return value;
}

void write_string(std::ostream& out, const std::string& s) {
  write_pod(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::istream& in) {
  const auto len = read_pod<std::uint32_t>(in);
  std::string s(len, '\0');
  in.read(s.data(), len);
  if (!in) throw Error(ErrorCode::kIo, "truncated index sidecar");
  return s;
}

}  // namespace

VectorIndex::VectorIndex(std::vector<std::string> ids, std::vector<EmbeddingVector> vectors)
    : ids_(std::move(ids)), vectors_(std::move(vectors)) {
  if (ids_.size() != vectors_.size()) {
    throw Error(ErrorCode::kInternal, "index ids and vectors differ in length");
  }
  if (!vectors_.empty()) dimension_ = vectors_.front().dimension();
  for (std::size_t row = 0; row < ids_.size(); ++row) {
    if (vectors_[row].dimension() != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch, "mixed dimensions in index");
    }
    row_by_id_.emplace(ids_[row], row);
  }
}

std::optional<std::size_t> VectorIndex::row_of(const std::string& id) const {
  const auto it = row_by_id_.find(id);
  if (it == row_by_id_.end()) return std::nullopt;
  return it->second;
}

const EmbeddingVector& VectorIndex::vector_of(const std::string& id) const {
  const auto row = row_of(id);
  if (!row) throw Error(ErrorCode::kUnknownArtifact, "artifact '" + id + "' is not indexed");
  return vectors_[*row];
}

IndexBuildResult build_index(const Corpus& corpus) {
  std::vector<std::string> ids;
  std::vector<EmbeddingVector> vectors;
  std::vector<IndexDiagnostic> skipped;
  ids.reserve(corpus.message_count());
  vectors.reserve(corpus.message_count());
  for (const auto& a : corpus.artifacts()) {
    try {
      vectors.push_back(embed_text(a.retrievable_text()));
      ids.push_back(a.id);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyText) throw;
      skipped.push_back({a.id, e.what()});
    }
  }
  return {VectorIndex(std::move(ids), std::move(vectors)), std::move(skipped)};
}

std::vector<ScoredId> query_top_k(const VectorIndex& index, const EmbeddingVector& query,
                                  std::size_t k, std::optional<std::span<const std::string>> scope) {
  if (query.dimension() != index.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "query dimension does not match index");
  }
  if (k == 0) return {};

  struct RowScore {
    double score;
    std::size_t row;
  };
  const auto& ids = index.ids();
  auto before = [&ids](const RowScore& a, const RowScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return ids[a.row] < ids[b.row];
  };

  std::vector<RowScore> scored;
  if (scope) {
    scored.reserve(scope->size());
    for (const auto& id : *scope) {
      const auto row = index.row_of(id);
      if (!row) throw Error(ErrorCode::kUnknownArtifact, "artifact '" + id + "' is not indexed");
      scored.push_back({ranking_score(cosine_similarity(query, index.vector(*row))), *row});
    }
  } else {
    scored.reserve(index.size());
    for (std::size_t row = 0; row < index.size(); ++row) {
      scored.push_back({ranking_score(cosine_similarity(query, index.vector(row))), row});
    }
  }

  if (k < scored.size()) {
    std::nth_element(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end(),
                     before);
    scored.resize(k);
  }
  std::sort(scored.begin(), scored.end(), before);

  std::vector<ScoredId> out;
  out.reserve(scored.size());
  for (const auto& s : scored) out.push_back({ids[s.row], s.score});
  return out;
}

void save_index(const std::filesystem::path& path, const VectorIndex& index,
                const std::string& corpus_id) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(kMagic, sizeof kMagic);
  write_pod(out, static_cast<std::uint32_t>(index.dimension()));
  write_pod(out, static_cast<std::uint64_t>(index.size()));
  write_string(out, corpus_id);
  for (std::size_t row = 0; row < index.size(); ++row) {
    write_string(out, index.ids()[row]);
    const auto& values = index.vector(row).values;
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(double)));
  }
  if (!out) throw Error(ErrorCode::kIo, "cannot write index sidecar " + path.string());
}

VectorIndex load_index(const std::filesystem::path& path, std::string* corpus_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open index sidecar " + path.string());
  char magic[sizeof kMagic];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
    throw Error(ErrorCode::kIo, "not an index sidecar: " + path.string());
  }
  const auto dim = read_pod<std::uint32_t>(in);
  const auto count = read_pod<std::uint64_t>(in);
  std::string cid = read_string(in);
  if (corpus_id != nullptr) *corpus_id = cid;
  std::vector<std::string> ids;
  std::vector<EmbeddingVector> vectors;
  for (std::uint64_t i = 0; i < count; ++i) {
    ids.push_back(read_string(in));
    EmbeddingVector v{std::vector<double>(dim)};
    in.read(reinterpret_cast<char*>(v.values.data()),
            static_cast<std::streamsize>(dim * sizeof(double)));
    if (!in) throw Error(ErrorCode::kIo, "truncated index sidecar");
    vectors.push_back(std::move(v));
  }
  return VectorIndex(std::move(ids), std::move(vectors));
}

}  // namespace vocp
