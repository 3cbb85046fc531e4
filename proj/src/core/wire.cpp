#include "core/wire.hpp"

#include "core/serialize.hpp"

namespace vocp {

using nlohmann::json;

json ingest_json(const IngestResult& r) {
  json lines = json::array();
  for (const auto& d : r.skipped_lines) {
    lines.push_back({{"line", d.line}, {"code", error_code_name(d.code)}, {"message", d.message}});
  }
  json index = json::array();
  for (const auto& d : r.skipped_index) index.push_back({{"artifact_id", d.artifact_id}, {"message", d.message}});
  return {{"corpus_id", r.corpus_id},
          {"message_count", r.message_count},
          {"author_count", r.author_count},
          {"duplicates", r.duplicates},
          {"skipped_lines", std::move(lines)},
          {"skipped_index", std::move(index)},
          {"stats", to_json(r.stats)}};
}

json personas_json(const std::vector<PersonaSegment>& personas) {
  json out = json::array();
  for (const auto& p : personas) out.push_back(to_json(p));
  return out;
}

json message_json(const std::string& session_id, const TurnOutcome& outcome) {
  json out = to_json(outcome.response);
  out["session_id"] = session_id;
  out["turn_index"] = outcome.turn_index;
  out["bundle"] = to_json(outcome.bundle);
  return out;
}

json reaction_json(const std::string& session_id, const ReactionOutcome& outcome) {
  json out = to_json(outcome.report);
  out["session_id"] = session_id;
  out["turn_index"] = outcome.turn_index;
  return out;
}

json audit_json(const AuditResult& r) {
  json turns = json::array();
  for (const auto& t : r.turns) {
    json jt = {{"turn_index", t.turn_index}, {"type", t.type}, {"pass", t.pass}};
    if (t.report) jt["report"] = to_json(*t.report);
    if (t.error) jt["error"] = *t.error;
    turns.push_back(std::move(jt));
  }
  return {{"corpus_id", r.corpus_id}, {"pass", r.pass}, {"turns", std::move(turns)}};
}

json error_json(const Error& error) {
  json details = json::array();
  if (const auto* fe = dynamic_cast<const FieldError*>(&error)) {
    details.push_back({{"field", fe->field()}, {"problem", fe->problem()}});
  }
  return {{"code", error.code_name()}, {"message", error.what()}, {"details", std::move(details)}};
}

namespace {

std::vector<std::string> string_list(const json& j, const char* field) {
  if (!j.contains(field) || j.at(field).is_null()) return {};
  const auto& v = j.at(field);
  if (!v.is_array()) throw FieldError(field, "must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw FieldError(field, "must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

CorpusMeta corpus_meta_from_json(const json& j) {
  CorpusMeta meta;
  if (!j.is_object()) return meta;
  meta.platforms = string_list(j, "platforms");
  if (auto methods = string_list(j, "collection_methods"); !methods.empty()) meta.collection_methods = methods;
  return meta;
}

ReactionStimulus stimulus_from_request(const json& j) {
  if (!j.is_object()) throw FieldError("stimulus", "must be an object");
  if (j.contains("stimulus")) {
    if (!j.at("stimulus").is_object()) throw FieldError("stimulus", "must be an object");
    return stimulus_from_json(j.at("stimulus"));
  }
  return stimulus_from_json(j);
}

InteractionMode mode_from_request(const json& j) {
  if (!j.contains("mode") || j.at("mode").is_null()) return InteractionMode::kInterview;
  if (!j.at("mode").is_string()) throw FieldError("mode", "must be 'interview' or 'reaction'");
  const auto mode = parse_mode(j.at("mode").get<std::string>());
  if (!mode) throw FieldError("mode", "must be 'interview' or 'reaction'");
  return *mode;
}

json parse_body(std::string_view body) {
  auto j = json::parse(body, nullptr, false);
  if (j.is_discarded()) throw FieldError("body", "not valid JSON");
  if (!j.is_object()) throw FieldError("body", "must be a JSON object");
  return j;
}

}  // namespace vocp
