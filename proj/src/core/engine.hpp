#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "core/config.hpp"
#include "core/conversation.hpp"
#include "core/corpus.hpp"
#include "core/corpus_store.hpp"
#include "core/generation.hpp"
#include "core/persona.hpp"
#include "core/provenance.hpp"
#include "core/reaction.hpp"
#include "core/topics.hpp"
#include "core/vector_index.hpp"

namespace vocp {

struct IngestResult {
  std::string corpus_id;
  std::size_t message_count = 0;
  std::size_t author_count = 0;
  std::size_t duplicates = 0;
  std::vector<LineDiagnostic> skipped_lines;
  std::vector<IndexDiagnostic> skipped_index;
  CorpusStats stats;
};

struct TurnOutcome {
  std::size_t turn_index = 0;
  PersonaResponse response;
  EvidenceBundle bundle;
};

struct ReactionOutcome {
  std::size_t turn_index = 0;
  ReactionReport report;
};

struct AuditTurn {
  std::size_t turn_index = 0;
  std::string type;
  std::optional<VerificationReport> report;
  std::optional<std::string> error;
  bool pass = true;
};

struct AuditResult {
  std::string corpus_id;
  std::vector<AuditTurn> turns;
  bool pass = true;
};

/// Service core behind the HTTP gateway, the C API and the CLI. Owns the
/// flat-file state under data_dir and maps requests onto module operations:
///
///   corpora/<id>/artifacts.jsonl   append-only record log
///   corpora/<id>/meta.json         collection metadata
///   corpora/<id>/index.bin         embedding sidecar
///   corpora/<id>/clusters.json     topic clusters (membership)
///   corpora/<id>/personas.json     derived personas
///   sessions/<sid>.meta.json       session header
///   sessions/<sid>.jsonl           append-only transcript
///   sessions/<sid>.audit.jsonl     redaction audit events
///
/// The in-memory catalog is rebuilt from these files at construction.
class Engine {
 public:
  explicit Engine(ServiceConfig config, std::shared_ptr<const GenerationBackend> backend = nullptr);
  ~Engine();

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const ServiceConfig& config() const { return config_; }
  Timestamp now() const;
  ModelInfo model_info() const;

  IngestResult ingest(std::string_view jsonl, std::string corpus_id, CorpusMeta meta = {});
  IngestResult ingest_file(const std::filesystem::path& path, std::string corpus_id,
                           CorpusMeta meta = {});
  std::vector<std::string> corpus_ids() const;
  std::shared_ptr<const Corpus> corpus(const std::string& corpus_id) const;
  std::shared_ptr<const VectorIndex> index(const std::string& corpus_id) const;
  std::string export_corpus(const std::string& corpus_id) const;
  const VocArtifact& artifact(const std::string& corpus_id, const std::string& artifact_id) const;

  /// Clusters and derives personas once; later calls return the stored set.
  std::vector<PersonaSegment> derive(const std::string& corpus_id);
  std::vector<TopicCluster> clusters(const std::string& corpus_id) const;
  std::vector<PersonaSegment> personas() const;
  PersonaSegment persona(const std::string& persona_id) const;
  std::shared_ptr<const PersonaContext> persona_context(const std::string& persona_id) const;
  ProvenanceCard card(const std::string& persona_id) const;

  std::string open_session(const std::string& persona_id, InteractionMode mode);
  TurnOutcome message(const std::string& session_id, std::string_view text);
  ReactionOutcome react(const std::string& session_id, const ReactionStimulus& stimulus);
  ConversationSummary summary(const std::string& session_id) const;
  void close_session(const std::string& session_id);
  std::vector<TurnRecord> transcript(const std::string& session_id) const;
  std::filesystem::path transcript_path(const std::string& session_id) const;

  /// Re-verifies every message turn of a stored transcript. The corpus comes
  /// from `corpus_id` or, when absent, from the adjacent session header.
  AuditResult audit_transcript(const std::filesystem::path& path,
                               const std::optional<std::string>& corpus_id = std::nullopt) const;

  /// Rejects new turns and waits for in-flight ones to land on disk.
  void shutdown();

 private:
  struct CorpusEntry {
    std::shared_ptr<const Corpus> corpus;
    std::shared_ptr<const VectorIndex> index;
    std::vector<TopicCluster> clusters;
    std::vector<PersonaSegment> personas;
  };
  struct SessionEntry {
    std::shared_ptr<Session> session;
    std::string corpus_id;
  };

  void load_catalog();
  void load_sessions();
  std::shared_ptr<const CorpusEntry> entry(const std::string& corpus_id) const;
  std::pair<std::shared_ptr<const CorpusEntry>, const PersonaSegment*> find_persona(
      const std::string& persona_id) const;
  SessionEntry session_entry(const std::string& session_id) const;
  SessionHooks hooks_for(const std::string& session_id) const;
  void write_session_meta(const Session& session, const std::string& corpus_id) const;

  ServiceConfig config_;
  std::shared_ptr<const GenerationBackend> backend_;
  CorpusStore store_;
  std::filesystem::path sessions_dir_;

  mutable std::shared_mutex catalog_mutex_;
  std::map<std::string, std::shared_ptr<const CorpusEntry>> corpora_;
  mutable std::mutex contexts_mutex_;
  mutable std::map<std::string, std::shared_ptr<const PersonaContext>> contexts_;
  std::mutex write_mutex_;

  mutable std::mutex sessions_mutex_;
  std::map<std::string, SessionEntry> sessions_;
  std::size_t next_session_ = 1;
  std::atomic<bool> shutting_down_{false};
};

}  // namespace vocp
