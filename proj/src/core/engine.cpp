#include "core/engine.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "core/error.hpp"
#include "core/external_backend.hpp"
#include "core/serialize.hpp"

namespace vocp {
namespace fs = std::filesystem;
namespace {

std::shared_ptr<const GenerationBackend> make_backend(const ServiceConfig& config) {
  if (config.backend == BackendKind::kExternal) {
    return std::make_shared<ExternalBackend>(BackendEndpoint::parse(config.endpoint));
  }
  return std::make_shared<ExtractiveBackend>();
}

void write_text(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

void append_line(const fs::path& path, const std::string& line) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  out << line << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot append to " + path.string());
}

nlohmann::json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kIo, "corrupt JSON in " + path.string());
  return j;
}

std::string session_name(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "s%06zu", n);
  return buf;
}

}  // namespace

Engine::Engine(ServiceConfig config, std::shared_ptr<const GenerationBackend> backend)
    : config_(std::move(config)),
      backend_(backend ? std::move(backend) : make_backend(config_)),
      store_(config_.data_dir / "corpora"),
      sessions_dir_(config_.data_dir / "sessions") {
  fs::create_directories(sessions_dir_);
  load_catalog();
  load_sessions();
}

Engine::~Engine() { shutdown(); }

Timestamp Engine::now() const {
  if (config_.fixed_time) return *config_.fixed_time;
  return std::chrono::floor<std::chrono::microseconds>(std::chrono::system_clock::now());
}

ModelInfo Engine::model_info() const {
  ModelInfo info{backend_->descriptor(), baseline_risks()};
  info.risks.insert(info.risks.end(), config_.extra_risks.begin(), config_.extra_risks.end());
  return info;
}

void Engine::load_catalog() {
  for (const auto& id : store_.list()) {
    auto e = std::make_shared<CorpusEntry>();
    try {
      e->corpus = std::make_shared<const Corpus>(store_.load(id));
    } catch (const Error& err) {
      std::cerr << "vocp: skipping corpus '" << id << "': " << err.what() << '\n';
      continue;
    }
    const fs::path dir = store_.dir(id);
    std::shared_ptr<const VectorIndex> index;
    if (fs::exists(dir / "index.bin")) {
      try {
        index = std::make_shared<const VectorIndex>(load_index(dir / "index.bin"));
      } catch (const Error&) {
        index.reset();
      }
    }
    if (!index || index->size() > e->corpus->message_count()) {
      index = std::make_shared<const VectorIndex>(build_index(*e->corpus).index);
      save_index(dir / "index.bin", *index, id);
    }
    e->index = std::move(index);
    if (fs::exists(dir / "personas.json") && fs::exists(dir / "clusters.json")) {
      for (const auto& c : read_json(dir / "clusters.json")) e->clusters.push_back(cluster_from_json(c));
      for (const auto& p : read_json(dir / "personas.json")) e->personas.push_back(persona_from_json(p));
    }
    corpora_[id] = std::move(e);
  }
}

void Engine::load_sessions() {
  for (const auto& file : fs::directory_iterator(sessions_dir_)) {
    const std::string name = file.path().filename().string();
    const std::string suffix = ".meta.json";
    if (name.size() <= suffix.size() || name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    try {
      const auto meta = read_json(file.path());
      const std::string sid = meta.at("session_id").get<std::string>();
      const auto mode = parse_mode(meta.at("mode").get<std::string>());
      const auto created = parse_rfc3339(meta.at("created_at").get<std::string>());
      std::vector<TurnRecord> turns;
      if (std::ifstream in(sessions_dir_ / (sid + ".jsonl")); in) {
        std::string line;
        while (std::getline(in, line)) {
          if (!line.empty()) turns.push_back(turn_from_json(nlohmann::json::parse(line)));
        }
      }
      auto session = std::make_shared<Session>(sid, meta.at("persona_id").get<std::string>(),
                                               mode.value_or(InteractionMode::kInterview),
                                               created.value_or(Timestamp{}), hooks_for(sid),
                                               std::move(turns));
      if (meta.value("closed", false)) session->close();
      sessions_[sid] = {session, meta.at("corpus_id").get<std::string>()};
      if (sid.size() > 1 && sid[0] == 's') {
        next_session_ = std::max(next_session_, static_cast<std::size_t>(std::stoull(sid.substr(1))) + 1);
      }
    } catch (const std::exception& err) {
      std::cerr << "vocp: skipping session header " << file.path() << ": " << err.what() << '\n';
    }
  }
}

std::shared_ptr<const Engine::CorpusEntry> Engine::entry(const std::string& corpus_id) const {
  std::shared_lock lock(catalog_mutex_);
  const auto it = corpora_.find(corpus_id);
  if (it == corpora_.end()) throw Error(ErrorCode::kUnknownCorpus, "unknown corpus '" + corpus_id + "'");
  return it->second;
}

IngestResult Engine::ingest(std::string_view jsonl, std::string corpus_id, CorpusMeta meta) {
  if (!is_valid_identifier(corpus_id)) {
    throw FieldError("corpus_id", "must be 1-128 characters of [A-Za-z0-9._-], not starting with '.'");
  }
  std::lock_guard write_lock(write_mutex_);
  if (store_.exists(corpus_id)) {
    throw Error(ErrorCode::kCorpusExists, "corpus '" + corpus_id + "' already exists");
  }
  auto feed = parse_artifact_feed(jsonl);
  const std::size_t parsed = feed.records.size();
  auto corpus = std::make_shared<const Corpus>(ingest_corpus(std::move(feed.records), corpus_id, std::move(meta)));
  auto built = build_index(*corpus);
  store_.write(*corpus);
  save_index(store_.dir(corpus_id) / "index.bin", built.index, corpus_id);

  IngestResult result;
  result.corpus_id = corpus_id;
  result.message_count = corpus->message_count();
  result.author_count = corpus->author_count();
  result.duplicates = parsed - corpus->message_count();
  result.skipped_lines = std::move(feed.diagnostics);
  result.skipped_index = std::move(built.skipped);
  result.stats = corpus_stats(*corpus);

  auto e = std::make_shared<CorpusEntry>();
  e->corpus = std::move(corpus);
  e->index = std::make_shared<const VectorIndex>(std::move(built.index));
  std::unique_lock lock(catalog_mutex_);
  corpora_[corpus_id] = std::move(e);
  return result;
}

IngestResult Engine::ingest_file(const fs::path& path, std::string corpus_id, CorpusMeta meta) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "file not found: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest(buf.str(), std::move(corpus_id), std::move(meta));
}

std::vector<std::string> Engine::corpus_ids() const {
  std::shared_lock lock(catalog_mutex_);
  std::vector<std::string> ids;
  for (const auto& [id, e] : corpora_) ids.push_back(id);
  return ids;
}

std::shared_ptr<const Corpus> Engine::corpus(const std::string& corpus_id) const {
  return entry(corpus_id)->corpus;
}

std::shared_ptr<const VectorIndex> Engine::index(const std::string& corpus_id) const {
  return entry(corpus_id)->index;
}

std::string Engine::export_corpus(const std::string& corpus_id) const {
  return export_corpus_jsonl(*corpus(corpus_id));
}

const VocArtifact& Engine::artifact(const std::string& corpus_id, const std::string& artifact_id) const {
  return entry(corpus_id)->corpus->at(artifact_id);
}

std::vector<PersonaSegment> Engine::derive(const std::string& corpus_id) {
  std::lock_guard write_lock(write_mutex_);
  const auto current = entry(corpus_id);
  if (!current->personas.empty()) return current->personas;

  const auto& t = config_.thresholds;
  auto clusters = cluster_topics(*current->index, t.tau_cluster);
  label_clusters(clusters, *current->corpus);
  auto personas = derive_personas(clusters, *current->corpus, t.min_cluster_size, t.min_evidence);

  nlohmann::json cj = nlohmann::json::array();
  for (const auto& c : clusters) cj.push_back(to_json(c));
  nlohmann::json pj = nlohmann::json::array();
  for (const auto& p : personas) pj.push_back(to_json(p));
  const fs::path dir = store_.dir(corpus_id);
  write_text(dir / "clusters.json", cj.dump() + "\n");
  write_text(dir / "personas.json", pj.dump(2) + "\n");

  auto next = std::make_shared<CorpusEntry>(*current);
  next->clusters = std::move(clusters);
  next->personas = personas;
  std::unique_lock lock(catalog_mutex_);
  corpora_[corpus_id] = std::move(next);
  return personas;
}

std::vector<TopicCluster> Engine::clusters(const std::string& corpus_id) const {
  return entry(corpus_id)->clusters;
}

std::vector<PersonaSegment> Engine::personas() const {
  std::shared_lock lock(catalog_mutex_);
  std::vector<PersonaSegment> out;
  for (const auto& [id, e] : corpora_) out.insert(out.end(), e->personas.begin(), e->personas.end());
  return out;
}

std::pair<std::shared_ptr<const Engine::CorpusEntry>, const PersonaSegment*> Engine::find_persona(
    const std::string& persona_id) const {
  std::shared_lock lock(catalog_mutex_);
  for (const auto& [id, e] : corpora_) {
    for (const auto& p : e->personas) {
      if (p.persona_id == persona_id) return {e, &p};
    }
  }
  throw Error(ErrorCode::kUnknownPersona, "unknown persona '" + persona_id + "'");
}

PersonaSegment Engine::persona(const std::string& persona_id) const {
  return *find_persona(persona_id).second;
}

std::shared_ptr<const PersonaContext> Engine::persona_context(const std::string& persona_id) const {
  {
    std::lock_guard lock(contexts_mutex_);
    if (const auto it = contexts_.find(persona_id); it != contexts_.end()) return it->second;
  }
  const auto [e, p] = find_persona(persona_id);
  auto ctx = std::make_shared<const PersonaContext>(PersonaContext::make(e->corpus, e->index, *p, e->clusters));
  std::lock_guard lock(contexts_mutex_);
  return contexts_.emplace(persona_id, std::move(ctx)).first->second;
}

ProvenanceCard Engine::card(const std::string& persona_id) const {
  const auto [e, p] = find_persona(persona_id);
  return build_card(*p, e->clusters, *e->corpus, model_info(), config_.thresholds.min_evidence, now());
}

SessionHooks Engine::hooks_for(const std::string& session_id) const {
  const fs::path transcript = sessions_dir_ / (session_id + ".jsonl");
  const fs::path audit = sessions_dir_ / (session_id + ".audit.jsonl");
  SessionHooks hooks;
  hooks.on_turn = [transcript](const TurnRecord& record) { append_line(transcript, to_json(record).dump()); };
  hooks.on_audit = [audit](const AuditEvent& ev) {
    append_line(audit, nlohmann::json{{"session_id", ev.session_id},
                                      {"turn_index", ev.turn_index},
                                      {"kind", ev.kind},
                                      {"text", ev.text},
                                      {"evidence_id", ev.evidence_id},
                                      {"support", ev.support}}
                           .dump());
  };
  return hooks;
}

void Engine::write_session_meta(const Session& session, const std::string& corpus_id) const {
  const nlohmann::json meta = {{"session_id", session.session_id()},
                               {"persona_id", session.persona_id()},
                               {"corpus_id", corpus_id},
                               {"mode", mode_name(session.mode())},
                               {"created_at", format_rfc3339(session.created_at())},
                               {"closed", session.closed()}};
  write_text(sessions_dir_ / (session.session_id() + ".meta.json"), meta.dump(2) + "\n");
}

std::string Engine::open_session(const std::string& persona_id, InteractionMode mode) {
  const auto ctx = persona_context(persona_id);
  std::lock_guard lock(sessions_mutex_);
  std::string sid;
  do {
    sid = session_name(next_session_++);
  } while (sessions_.contains(sid) || fs::exists(sessions_dir_ / (sid + ".meta.json")));
  auto session = std::make_shared<Session>(sid, persona_id, mode, now(), hooks_for(sid));
  write_session_meta(*session, ctx->corpus->corpus_id());
  sessions_[sid] = {std::move(session), ctx->corpus->corpus_id()};
  return sid;
}

Engine::SessionEntry Engine::session_entry(const std::string& session_id) const {
  std::lock_guard lock(sessions_mutex_);
  const auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw Error(ErrorCode::kUnknownSession, "unknown session '" + session_id + "'");
  return it->second;
}

TurnOutcome Engine::message(const std::string& session_id, std::string_view text) {
  const auto se = session_entry(session_id);
  if (shutting_down_) throw Error(ErrorCode::kSessionClosed, "service is shutting down");
  const auto ctx = persona_context(se.session->persona_id());
  TurnTrace trace;
  TurnOutcome out;
  out.response = answer_turn(*se.session, text, *ctx, *backend_, config_.thresholds.turn_config(), now(), &trace);
  out.turn_index = trace.turn_index;
  out.bundle = std::move(trace.bundle);
  return out;
}

ReactionOutcome Engine::react(const std::string& session_id, const ReactionStimulus& stimulus) {
  const auto se = session_entry(session_id);
  if (shutting_down_) throw Error(ErrorCode::kSessionClosed, "service is shutting down");
  const auto ctx = persona_context(se.session->persona_id());
  ReactionOutcome out;
  out.report = react_turn(*se.session, stimulus, *ctx, config_.thresholds.turn_config(), now(), &out.turn_index);
  return out;
}

ConversationSummary Engine::summary(const std::string& session_id) const {
  return summarize_session(*session_entry(session_id).session);
}

void Engine::close_session(const std::string& session_id) {
  const auto se = session_entry(session_id);
  se.session->close();
  se.session->wait_idle();
  write_session_meta(*se.session, se.corpus_id);
}

std::vector<TurnRecord> Engine::transcript(const std::string& session_id) const {
  return session_entry(session_id).session->turns();
}

fs::path Engine::transcript_path(const std::string& session_id) const {
  session_entry(session_id);
  return sessions_dir_ / (session_id + ".jsonl");
}

AuditResult Engine::audit_transcript(const fs::path& path, const std::optional<std::string>& corpus_id) const {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "file not found: " + path.string());

  AuditResult result;
  if (corpus_id) {
    result.corpus_id = *corpus_id;
  } else {
    std::string stem = path.filename().string();
    if (stem.size() > 6 && stem.compare(stem.size() - 6, 6, ".jsonl") == 0) stem.resize(stem.size() - 6);
    const fs::path meta = path.parent_path() / (stem + ".meta.json");
    if (!fs::exists(meta)) {
      throw Error(ErrorCode::kUnknownCorpus, "no session header next to " + path.string() +
                                                 "; pass the corpus id explicitly");
    }
    result.corpus_id = read_json(meta).at("corpus_id").get<std::string>();
  }
  const auto e = entry(result.corpus_id);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    AuditTurn turn;
    turn.turn_index = line_no - 1;
    try {
      const TurnRecord record = turn_from_json(nlohmann::json::parse(line));
      turn.turn_index = record.turn_index;
      turn.type = record.type == TurnType::kMessage ? "message" : "reaction";
      if (record.type == TurnType::kMessage) {
        EvidenceBundle bundle;
        bundle.bundle_id = "audit/" + std::to_string(record.turn_index);
        for (const auto& s : record.bundle_ids_scores) bundle.items.push_back({e->corpus->at(s.id), s.score});
        VerificationReport report = verify_response(record.response, bundle, config_.thresholds.tau_ground);
        if (record.response.kind == ResponseKind::kAnswered && record.response.claims.empty()) {
          turn.error = "answered turn without claims";
          report.pass = false;
        }
        if (record.response.kind == ResponseKind::kAbstained &&
            (!record.response.claims.empty() || !record.response.abstain_note)) {
          turn.error = "abstained turn must have no claims and an abstain note";
          report.pass = false;
        }
        turn.pass = report.pass;
        turn.report = std::move(report);
      }
    } catch (const Error& err) {
      turn.error = std::string(err.code_name()) + ": " + err.what();
      turn.pass = false;
    } catch (const nlohmann::json::exception& err) {
      turn.error = std::string("bad_record: ") + err.what();
      turn.pass = false;
    }
    result.pass = result.pass && turn.pass;
    result.turns.push_back(std::move(turn));
  }
  return result;
}

void Engine::shutdown() {
  if (shutting_down_.exchange(true)) return;
  std::vector<std::shared_ptr<Session>> sessions;
  {
    std::lock_guard lock(sessions_mutex_);
    for (const auto& [id, se] : sessions_) sessions.push_back(se.session);
  }
  for (const auto& s : sessions) s->wait_idle();
}

}  // namespace vocp
