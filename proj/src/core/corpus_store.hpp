#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "core/corpus.hpp"

namespace vocp {

/// Flat-file corpus persistence: <root>/<corpus_id>/artifacts.jsonl is an
/// append-only record log, meta.json carries CorpusMeta.
class CorpusStore {
 public:
  explicit CorpusStore(std::filesystem::path root);

  bool exists(const std::string& corpus_id) const;
  std::filesystem::path dir(const std::string& corpus_id) const;

  /// Throws Error{kCorpusExists} if the corpus already has a log.
  void write(const Corpus& corpus) const;
  Corpus load(const std::string& corpus_id) const;
  std::vector<std::string> list() const;

 private:
  std::filesystem::path root_;
};

}  // namespace vocp
