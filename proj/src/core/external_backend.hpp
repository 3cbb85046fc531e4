#pragma once

#include <chrono>
#include <string>

#include <nlohmann/json.hpp>

#include "core/generation.hpp"

namespace vocp {

inline constexpr std::string_view kGroundingInstruction =
    "Respond only using the numbered evidence; cite evidence ids; say you don't know otherwise.";

/// Where an external generation service lives, e.g. "http://127.0.0.1:9000/generate".
struct BackendEndpoint {
  std::string scheme_host_port;
  std::string path = "/";

  /// Throws Error{kBadConfig} for anything but a plain http URL.
  static BackendEndpoint parse(const std::string& url);
  std::string url() const { return scheme_host_port + path; }
};

/// Request body of the backend wire contract.
nlohmann::json make_backend_request(const GenerationRequest& request);

/// Validates a backend reply and splits sentences into accepted (citing a
/// bundle id) and rejected. Throws Error{kMalformedBackendReply}.
DraftResponse parse_backend_reply(const std::string& body, const EvidenceBundle& evidence);

/// POSTs the request to the endpoint. Throws Error{kBackendUnavailable} when
/// the service cannot be reached or answers with a non-2xx status.
DraftResponse generate_external(const GenerationRequest& request, const BackendEndpoint& endpoint,
                                std::chrono::milliseconds timeout = std::chrono::seconds(30));

class ExternalBackend final : public GenerationBackend {
 public:
  explicit ExternalBackend(BackendEndpoint endpoint,
                           std::chrono::milliseconds timeout = std::chrono::seconds(30))
      : endpoint_(std::move(endpoint)), timeout_(timeout) {}

  DraftResponse generate(const GenerationRequest& request) const override {
    return generate_external(request, endpoint_, timeout_);
  }
  std::string descriptor() const override { return "external:" + endpoint_.url(); }

 private:
  BackendEndpoint endpoint_;
  std::chrono::milliseconds timeout_;
};

}  // namespace vocp
