#pragma once

#include <nlohmann/json.hpp>

#include "core/engine.hpp"
#include "core/error.hpp"

// JSON shapes shared by the HTTP gateway and the C API, so both surfaces
// return identical documents for identical operations.
namespace vocp {

nlohmann::json ingest_json(const IngestResult& result);
nlohmann::json personas_json(const std::vector<PersonaSegment>& personas);
nlohmann::json message_json(const std::string& session_id, const TurnOutcome& outcome);
nlohmann::json reaction_json(const std::string& session_id, const ReactionOutcome& outcome);
nlohmann::json audit_json(const AuditResult& result);
nlohmann::json error_json(const Error& error);

CorpusMeta corpus_meta_from_json(const nlohmann::json& j);
/// Accepts {"stimulus": {...}} or the stimulus document itself.
ReactionStimulus stimulus_from_request(const nlohmann::json& j);
InteractionMode mode_from_request(const nlohmann::json& j);
/// Parses a request body, mapping syntax errors to FieldError("body").
nlohmann::json parse_body(std::string_view body);

}  // namespace vocp
