#include "core/corpus.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace vocp {

const VocArtifact* Corpus::find(std::string_view id) const {
  const auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &artifacts_[it->second];
}

const VocArtifact& Corpus::at(std::string_view id) const {
  const VocArtifact* a = find(id);
  if (a == nullptr) {
    throw Error(ErrorCode::kUnknownArtifact, "unknown artifact '" + std::string(id) + "'");
  }
  return *a;
}

Corpus ingest_corpus(std::vector<VocArtifact> records, std::string corpus_id, CorpusMeta meta) {
  Corpus corpus;
  corpus.corpus_id_ = std::move(corpus_id);
  corpus.meta_ = std::move(meta);
  if (corpus.meta_.collection_methods.empty()) corpus.meta_.collection_methods = {"unspecified"};

  std::unordered_set<std::string> authors;
  for (auto& record : records) {
    if (corpus.by_id_.contains(record.id)) continue;
    corpus.by_id_.emplace(record.id, corpus.artifacts_.size());
    corpus.channels_.insert(record.channel);
    authors.insert(record.author_id);
    corpus.artifacts_.push_back(std::move(record));
  }
  if (corpus.artifacts_.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no valid records in corpus '" + corpus.corpus_id_ + "'");
  }
  corpus.author_count_ = authors.size();
  const auto [lo, hi] = std::minmax_element(
      corpus.artifacts_.begin(), corpus.artifacts_.end(),
      [](const VocArtifact& a, const VocArtifact& b) { return a.created_at < b.created_at; });
  corpus.temporal_range_ = {lo->created_at, hi->created_at};
  return corpus;
}

FeedParseResult parse_artifact_feed(std::istream& in) {
  FeedParseResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      result.records.push_back(parse_artifact_record(line));
    } catch (const Error& e) {
      result.diagnostics.push_back({line_no, e.code(), e.what()});
    }
  }
  return result;
}

FeedParseResult parse_artifact_feed(std::string_view jsonl) {
  std::istringstream in{std::string(jsonl)};
  return parse_artifact_feed(in);
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  for (const auto& a : corpus.artifacts()) {
    ++stats.per_channel[a.channel];
    ++stats.per_author[a.author_id];
    ++stats.per_month[month_key(a.created_at)];
  }
  return stats;
}

std::string export_corpus_jsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& a : corpus.artifacts()) {
    out += artifact_to_record(a);
    out += '\n';
  }
  return out;
}

bool is_valid_identifier(std::string_view id) {
  if (id.empty() || id.size() > 128 || id.front() == '.') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '_' || c == '.';
  });
}

}  // namespace vocp
