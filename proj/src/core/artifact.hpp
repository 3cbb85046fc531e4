#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "core/timestamp.hpp"

namespace vocp {

/// One piece of voice-of-customer evidence: a post, ticket, review or a
/// transcript extracted from image/video media.
struct VocArtifact {
  std::string id;
  std::string author_id;
  std::string channel;
  Timestamp created_at{};
  std::string text;
  std::optional<std::string> media_transcript;
  std::optional<std::string> lang;

  /// Text used for retrieval and labelling: text, blank line, transcript.
  std::string retrievable_text() const;

  bool operator==(const VocArtifact&) const = default;
};

/// Parses one JSONL record. Unknown fields are ignored, text is trimmed.
/// Throws Error{kMissingField | kBadTimestamp | kEmptyText | kBadRecord}.
VocArtifact parse_artifact_record(std::string_view line);
VocArtifact artifact_from_json(const nlohmann::json& record);

nlohmann::json artifact_to_json(const VocArtifact& artifact);
/// Single-line JSONL rendering in the ingest schema.
std::string artifact_to_record(const VocArtifact& artifact);

}  // namespace vocp
