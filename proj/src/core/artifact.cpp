#include "core/artifact.hpp"

#include "core/error.hpp"
#include "core/text.hpp"

namespace vocp {
namespace {

const std::string& required_string(const nlohmann::json& record, const char* name) {
  const auto it = record.find(name);
  if (it == record.end() || it->is_null()) {
    throw Error(ErrorCode::kMissingField, std::string("missing field '") + name + "'");
  }
  if (!it->is_string()) {
    throw Error(ErrorCode::kBadRecord, std::string("field '") + name + "' must be a string");
  }
  return it->get_ref<const std::string&>();
}

std::optional<std::string> optional_string(const nlohmann::json& record, const char* name) {
  const auto it = record.find(name);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorCode::kBadRecord, std::string("field '") + name + "' must be a string");
  }
  std::string value = trim(it->get_ref<const std::string&>());
  if (value.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::string VocArtifact::retrievable_text() const {
  if (!media_transcript) return text;
  return text + "\n\n" + *media_transcript;
}

VocArtifact artifact_from_json(const nlohmann::json& record) {
  if (!record.is_object()) throw Error(ErrorCode::kBadRecord, "record is not a JSON object");
  VocArtifact a;
  a.id = required_string(record, "id");
  if (a.id.empty()) throw Error(ErrorCode::kMissingField, "missing field 'id'");
  a.author_id = required_string(record, "author_id");
  a.channel = required_string(record, "channel");
  const std::string& created = required_string(record, "created_at");
  const auto ts = parse_rfc3339(created);
  if (!ts) throw Error(ErrorCode::kBadTimestamp, "created_at is not RFC 3339: '" + created + "'");
  a.created_at = *ts;
  a.text = trim(required_string(record, "text"));
  if (a.text.empty()) throw Error(ErrorCode::kEmptyText, "text is empty after trimming");
  a.media_transcript = optional_string(record, "media_transcript");
  a.lang = optional_string(record, "lang");
  return a;
}

VocArtifact parse_artifact_record(std::string_view line) {
  nlohmann::json record = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded()) throw Error(ErrorCode::kBadRecord, "malformed JSON");
  return artifact_from_json(record);
}

nlohmann::json artifact_to_json(const VocArtifact& a) {
  nlohmann::json j = {
      {"id", a.id},
      {"author_id", a.author_id},
      {"channel", a.channel},
      {"created_at", format_rfc3339(a.created_at)},
      {"text", a.text},
  };
  if (a.media_transcript) j["media_transcript"] = *a.media_transcript;
  if (a.lang) j["lang"] = *a.lang;
  return j;
}

std::string artifact_to_record(const VocArtifact& a) { return artifact_to_json(a).dump(); }

}  // namespace vocp
