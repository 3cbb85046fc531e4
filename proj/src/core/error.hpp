#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vocp {

enum class ErrorCode {
  kMissingField,
  kBadTimestamp,
  kEmptyText,
  kBadRecord,
  kEmptyCorpus,
  kDimensionMismatch,
  kEmptyIndex,
  kNoPersonas,
  kUnknownCorpus,
  kUnknownPersona,
  kUnknownSession,
  kUnknownArtifact,
  kCorpusExists,
  kCorpusMismatch,
  kNoUsableSentence,
  kBackendUnavailable,
  kMalformedBackendReply,
  kEmptyMessage,
  kSessionClosed,
  kBusy,
  kUnknownCitation,
  kNoFacets,
  kBadConfig,
  kBadRequest,
  kAddressInUse,
  kIo,
  kInternal,
};

// Stable machine-readable code, used in HTTP error bodies and CLI output.
constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingField: return "missing_field";
    case ErrorCode::kBadTimestamp: return "bad_timestamp";
    case ErrorCode::kEmptyText: return "empty_text";
    case ErrorCode::kBadRecord: return "bad_record";
    case ErrorCode::kEmptyCorpus: return "empty_corpus";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kEmptyIndex: return "empty_index";
    case ErrorCode::kNoPersonas: return "no_personas";
    case ErrorCode::kUnknownCorpus: return "unknown_corpus";
    case ErrorCode::kUnknownPersona: return "unknown_persona";
    case ErrorCode::kUnknownSession: return "unknown_session";
    case ErrorCode::kUnknownArtifact: return "unknown_artifact";
    case ErrorCode::kCorpusExists: return "corpus_exists";
    case ErrorCode::kCorpusMismatch: return "corpus_mismatch";
    case ErrorCode::kNoUsableSentence: return "no_usable_sentence";
    case ErrorCode::kBackendUnavailable: return "backend_unavailable";
    case ErrorCode::kMalformedBackendReply: return "malformed_backend_reply";
    case ErrorCode::kEmptyMessage: return "empty_message";
    case ErrorCode::kSessionClosed: return "session_closed";
    case ErrorCode::kBusy: return "busy";
    case ErrorCode::kUnknownCitation: return "unknown_citation";
    case ErrorCode::kNoFacets: return "no_facets";
    case ErrorCode::kBadConfig: return "bad_config";
    case ErrorCode::kBadRequest: return "bad_request";
    case ErrorCode::kAddressInUse: return "address_in_use";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

/// Request validation failure pinned to one input field.
class FieldError : public Error {
 public:
  FieldError(std::string field, const std::string& problem)
      : Error(ErrorCode::kBadRequest, "field '" + field + "': " + problem),
        field_(std::move(field)),
        problem_(problem) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& problem() const noexcept { return problem_; }

 private:
  std::string field_;
  std::string problem_;
};

}  // namespace vocp
