#include "core/http_server.hpp"

#include <sys/socket.h>

#include <httplib.h>

#include <iostream>

#include "core/serialize.hpp"
#include "core/wire.hpp"

namespace vocp {

using nlohmann::json;

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownCorpus:
    case ErrorCode::kUnknownPersona:
    case ErrorCode::kUnknownSession:
    case ErrorCode::kUnknownArtifact:
      return 404;
    case ErrorCode::kBusy:
    case ErrorCode::kSessionClosed:
    case ErrorCode::kCorpusExists:
      return 409;
    case ErrorCode::kEmptyCorpus:
    case ErrorCode::kNoPersonas:
    case ErrorCode::kNoFacets:
      return 422;
    case ErrorCode::kBackendUnavailable:
      return 503;
    case ErrorCode::kMalformedBackendReply:
      return 502;
    case ErrorCode::kInternal:
    case ErrorCode::kIo:
    case ErrorCode::kCorpusMismatch:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kAddressInUse:
      return 500;
    default:
      return 400;
  }
}

namespace {

void send_json(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, const Error& error) {
  send_json(res, error_json(error), http_status_for(error.code()));
}

template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const Error& e) {
      send_error(res, e);
    } catch (const json::exception& e) {
      send_error(res, Error(ErrorCode::kBadRequest, e.what()));
    } catch (const std::exception& e) {
      send_error(res, Error(ErrorCode::kInternal, e.what()));
    }
  };
}

std::string required_string(const json& body, const char* field) {
  if (!body.contains(field) || body.at(field).is_null()) throw FieldError(field, "is required");
  if (!body.at(field).is_string()) throw FieldError(field, "must be a string");
  return body.at(field).get<std::string>();
}

}  // namespace

HttpServer::HttpServer(Engine& engine) : engine_(engine), server_(std::make_unique<httplib::Server>()) {
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  server_->set_payload_max_length(256u << 20);
  install_routes();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
    if (bound < 0) bound = 0;
  } else if (!server_->bind_to_port(host, port)) {
    bound = 0;
  }
  if (bound <= 0) {
    throw Error(ErrorCode::kAddressInUse, "cannot listen on " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::serve() { server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_->is_running()) server_->stop();
}

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

void HttpServer::install_routes() {
  auto& s = *server_;
  Engine& engine = engine_;

  s.Post("/v1/corpora", guarded([&engine](const httplib::Request& req, httplib::Response& res) {
    const std::string content_type = req.get_header_value("Content-Type");
    IngestResult result;
    if (content_type.rfind("application/json", 0) == 0) {
      const json body = parse_body(req.body);
      const std::string corpus_id = required_string(body, "corpus_id");
      const CorpusMeta meta = corpus_meta_from_json(body);
      if (body.contains("path")) {
        result = engine.ingest_file(required_string(body, "path"), corpus_id, meta);
      } else if (body.contains("jsonl")) {
        result = engine.ingest(required_string(body, "jsonl"), corpus_id, meta);
      } else {
        throw FieldError("jsonl", "either 'path' or 'jsonl' is required");
      }
    } else {
      if (!req.has_param("corpus_id")) throw FieldError("corpus_id", "query parameter is required");
      CorpusMeta meta;
      if (req.has_param("platform")) {
        for (std::size_t i = 0; i < req.get_param_value_count("platform"); ++i) {
          meta.platforms.push_back(req.get_param_value("platform", i));
        }
      }
      if (req.has_param("collection_method")) {
        meta.collection_methods.clear();
        for (std::size_t i = 0; i < req.get_param_value_count("collection_method"); ++i) {
          meta.collection_methods.push_back(req.get_param_value("collection_method", i));
        }
      }
      result = engine.ingest(req.body, req.get_param_value("corpus_id"), meta);
    }
    send_json(res, ingest_json(result), 201);
  }));

  s.Post(R"(/v1/corpora/([^/]+)/personas:derive)",
         guarded([&engine](const httplib::Request& req, httplib::Response& res) {
           send_json(res, personas_json(engine.derive(req.matches[1])));
         }));

  s.Get("/v1/personas", guarded([&engine](const httplib::Request&, httplib::Response& res) {
    send_json(res, personas_json(engine.personas()));
  }));

  s.Get(R"(/v1/personas/([^/]+))", guarded([&engine](const httplib::Request& req, httplib::Response& res) {
    send_json(res, to_json(engine.persona(req.matches[1])));
  }));

  s.Get(R"(/v1/personas/([^/]+)/provenance)",
        guarded([&engine](const httplib::Request& req, httplib::Response& res) {
          const std::string format = req.has_param("format") ? req.get_param_value("format") : "json";
          const ProvenanceCard card = engine.card(req.matches[1]);
          if (format == "json") {
            res.set_content(render_card(card, CardFormat::kJson), "application/json");
          } else if (format == "markdown" || format == "md") {
            res.set_content(render_card(card, CardFormat::kMarkdown), "text/markdown; charset=utf-8");
          } else {
            throw FieldError("format", "must be 'json' or 'markdown'");
          }
        }));

  s.Post("/v1/sessions", guarded([&engine](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req.body);
    const std::string persona_id = required_string(body, "persona_id");
    const InteractionMode mode = mode_from_request(body);
    const std::string sid = engine.open_session(persona_id, mode);
    send_json(res, {{"session_id", sid}, {"persona_id", persona_id}, {"mode", mode_name(mode)}}, 201);
  }));

  s.Post(R"(/v1/sessions/([^/]+)/messages)",
         guarded([&engine](const httplib::Request& req, httplib::Response& res) {
           const json body = parse_body(req.body);
           const std::string sid = req.matches[1];
           const std::string text = required_string(body, "text");
           send_json(res, message_json(sid, engine.message(sid, text)));
         }));

  s.Post(R"(/v1/sessions/([^/]+)/reactions)",
         guarded([&engine](const httplib::Request& req, httplib::Response& res) {
           const json body = parse_body(req.body);
           const std::string sid = req.matches[1];
           send_json(res, reaction_json(sid, engine.react(sid, stimulus_from_request(body))));
         }));

  s.Get(R"(/v1/sessions/([^/]+)/summary)",
        guarded([&engine](const httplib::Request& req, httplib::Response& res) {
          send_json(res, to_json(engine.summary(req.matches[1])));
        }));

  s.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    const std::string code = res.status == 404 ? "not_found" : "bad_request";
    send_json(res, {{"code", code}, {"message", req.method + " " + req.path}, {"details", json::array()}},
              res.status);
  });
}

}  // namespace vocp
