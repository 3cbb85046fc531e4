#include "core/external_backend.hpp"

#include <httplib.h>

#include "core/error.hpp"

namespace vocp {

BackendEndpoint BackendEndpoint::parse(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kBadConfig, "backend endpoint must be an http URL: '" + url + "'");
  }
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http") {
    throw Error(ErrorCode::kBadConfig, "unsupported backend scheme '" + scheme + "'");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  BackendEndpoint ep;
  if (path_start == std::string::npos) {
    ep.scheme_host_port = url;
  } else {
    ep.scheme_host_port = url.substr(0, path_start);
    ep.path = url.substr(path_start);
  }
  if (ep.scheme_host_port.size() <= scheme_end + 3) {
    throw Error(ErrorCode::kBadConfig, "backend endpoint has no host: '" + url + "'");
  }
  return ep;
}

nlohmann::json make_backend_request(const GenerationRequest& request) {
  nlohmann::json evidence = nlohmann::json::array();
  for (std::size_t i = 0; i < request.evidence.items.size(); ++i) {
    const auto& item = request.evidence.items[i];
    evidence.push_back({{"number", i + 1}, {"id", item.artifact.id}, {"text", item.artifact.retrievable_text()}});
  }
  return {
      {"persona",
       {{"persona_id", request.persona.persona_id},
        {"name", request.persona.name},
        {"summary_terms", request.persona.summary_terms},
        {"user_count", request.persona.user_count},
        {"message_count", request.persona.message_count}}},
      {"evidence", std::move(evidence)},
      {"question", request.question},
      {"mode", mode_name(request.mode)},
      {"instruction", kGroundingInstruction},
  };
}

DraftResponse parse_backend_reply(const std::string& body, const EvidenceBundle& evidence) {
  const auto reply = nlohmann::json::parse(body, nullptr, false);
  if (reply.is_discarded() || !reply.is_object()) {
    throw Error(ErrorCode::kMalformedBackendReply, "backend reply is not a JSON object");
  }
  const auto it = reply.find("sentences");
  if (it == reply.end() || !it->is_array()) {
    throw Error(ErrorCode::kMalformedBackendReply, "backend reply lacks a 'sentences' array");
  }
  DraftResponse draft;
  for (const auto& s : *it) {
    if (!s.is_object() || !s.contains("text") || !s["text"].is_string() ||
        !s.contains("evidence_id") || !s["evidence_id"].is_string()) {
      throw Error(ErrorCode::kMalformedBackendReply,
                  "each sentence needs string 'text' and 'evidence_id'");
    }
    DraftSentence sentence{s["text"].get<std::string>(), s["evidence_id"].get<std::string>()};
    if (evidence.contains(sentence.source_id)) {
      draft.sentences.push_back(std::move(sentence));
    } else {
      draft.rejected.push_back(std::move(sentence));
    }
  }
  return draft;
}

DraftResponse generate_external(const GenerationRequest& request, const BackendEndpoint& endpoint,
                                std::chrono::milliseconds timeout) {
  httplib::Client client(endpoint.scheme_host_port);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  const auto result =
      client.Post(endpoint.path, make_backend_request(request).dump(), "application/json");
  if (!result) {
    throw Error(ErrorCode::kBackendUnavailable,
                "backend " + endpoint.url() + " unreachable: " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw Error(ErrorCode::kBackendUnavailable,
                "backend " + endpoint.url() + " answered HTTP " + std::to_string(result->status));
  }
  return parse_backend_reply(result->body, request.evidence);
}

}  // namespace vocp
