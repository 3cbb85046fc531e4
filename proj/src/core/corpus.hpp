#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/artifact.hpp"
#include "core/error.hpp"

namespace vocp {

struct TemporalRange {
  Timestamp min{};
  Timestamp max{};
  bool operator==(const TemporalRange&) const = default;
};

/// Collection metadata that cannot be inferred from the records themselves.
struct CorpusMeta {
  std::vector<std::string> platforms;
  std::vector<std::string> collection_methods{"unspecified"};
  bool operator==(const CorpusMeta&) const = default;
};

/// Immutable, deduplicated artifact collection with derived metadata.
class Corpus {
 public:
  const std::string& corpus_id() const { return corpus_id_; }
  const std::vector<VocArtifact>& artifacts() const { return artifacts_; }
  const std::set<std::string>& channels() const { return channels_; }
  const TemporalRange& temporal_range() const { return temporal_range_; }
  std::size_t author_count() const { return author_count_; }
  std::size_t message_count() const { return artifacts_.size(); }
  const CorpusMeta& meta() const { return meta_; }

  const VocArtifact* find(std::string_view id) const;
  const VocArtifact& at(std::string_view id) const;

  bool operator==(const Corpus& other) const {
    return corpus_id_ == other.corpus_id_ && artifacts_ == other.artifacts_ && meta_ == other.meta_;
  }

 private:
  friend Corpus ingest_corpus(std::vector<VocArtifact>, std::string, CorpusMeta);

  std::string corpus_id_;
  std::vector<VocArtifact> artifacts_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::set<std::string> channels_;
  TemporalRange temporal_range_;
  std::size_t author_count_ = 0;
  CorpusMeta meta_;
};

/// Drops duplicate ids (first occurrence wins) and computes metadata.
/// Throws Error{kEmptyCorpus} when nothing survives.
Corpus ingest_corpus(std::vector<VocArtifact> records, std::string corpus_id,
                     CorpusMeta meta = {});

struct LineDiagnostic {
  std::size_t line = 0;  // 1-based
  ErrorCode code = ErrorCode::kBadRecord;
  std::string message;
};

struct FeedParseResult {
  std::vector<VocArtifact> records;
  std::vector<LineDiagnostic> diagnostics;
};

/// Parses a JSONL feed. Invalid lines are skipped with a diagnostic; blank
/// lines are ignored.
FeedParseResult parse_artifact_feed(std::istream& in);
FeedParseResult parse_artifact_feed(std::string_view jsonl);

struct CorpusStats {
  std::map<std::string, std::size_t> per_channel;
  std::map<std::string, std::size_t> per_author;
  std::map<std::string, std::size_t> per_month;  // "YYYY-MM"
};

CorpusStats corpus_stats(const Corpus& corpus);

/// JSONL export in insertion order, one record per line.
std::string export_corpus_jsonl(const Corpus& corpus);

bool is_valid_identifier(std::string_view id);

}  // namespace vocp
