#include "core/corpus_store.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

namespace vocp {
namespace fs = std::filesystem;

CorpusStore::CorpusStore(fs::path root) : root_(std::move(root)) { fs::create_directories(root_); }

fs::path CorpusStore::dir(const std::string& corpus_id) const { return root_ / corpus_id; }

bool CorpusStore::exists(const std::string& corpus_id) const {
  return fs::exists(dir(corpus_id) / "artifacts.jsonl");
}

void CorpusStore::write(const Corpus& corpus) const {
  const fs::path d = dir(corpus.corpus_id());
  if (exists(corpus.corpus_id())) {
    throw Error(ErrorCode::kCorpusExists, "corpus '" + corpus.corpus_id() + "' already exists");
  }
  fs::create_directories(d);
  {
    std::ofstream meta(d / "meta.json", std::ios::trunc);
    nlohmann::json j = {{"corpus_id", corpus.corpus_id()},
                        {"platforms", corpus.meta().platforms},
                        {"collection_methods", corpus.meta().collection_methods}};
    meta << j.dump(2) << '\n';
    if (!meta) throw Error(ErrorCode::kIo, "cannot write " + (d / "meta.json").string());
  }
  std::ofstream log(d / "artifacts.jsonl", std::ios::app);
  for (const auto& a : corpus.artifacts()) log << artifact_to_record(a) << '\n';
  log.flush();
  if (!log) throw Error(ErrorCode::kIo, "cannot write " + (d / "artifacts.jsonl").string());
}

Corpus CorpusStore::load(const std::string& corpus_id) const {
  const fs::path d = dir(corpus_id);
  std::ifstream log(d / "artifacts.jsonl");
  if (!log) throw Error(ErrorCode::kUnknownCorpus, "unknown corpus '" + corpus_id + "'");
  CorpusMeta meta;
  if (std::ifstream in(d / "meta.json"); in) {
    const auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_object()) {
      meta.platforms = j.value("platforms", std::vector<std::string>{});
      meta.collection_methods =
          j.value("collection_methods", std::vector<std::string>{"unspecified"});
    }
  }
  auto feed = parse_artifact_feed(log);
  return ingest_corpus(std::move(feed.records), corpus_id, std::move(meta));
}

std::vector<std::string> CorpusStore::list() const {
  std::vector<std::string> ids;
  if (!fs::exists(root_)) return ids;
  for (const auto& entry : fs::directory_iterator(root_)) {
    if (entry.is_directory() && fs::exists(entry.path() / "artifacts.jsonl")) {
      ids.push_back(entry.path().filename().string());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace vocp
