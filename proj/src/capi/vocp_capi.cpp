#include "vocp/vocp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <thread>

#include "core/http_server.hpp"
#include "core/serialize.hpp"
#include "core/wire.hpp"

struct vocp_engine {
  std::unique_ptr<vocp::Engine> engine;
};

struct vocp_server {
  std::unique_ptr<vocp::HttpServer> server;
  std::thread thread;
  int port = 0;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

vocp_status status_of(vocp::ErrorCode code) { return static_cast<vocp_status>(static_cast<int>(code) + 1); }

vocp_status fail(const vocp::Error& error) {
  last_error = vocp::error_json(error).dump();
  return status_of(error.code());
}

vocp_status invalid(const char* what) {
  last_error = json{{"code", "invalid_argument"}, {"message", what}, {"details", json::array()}}.dump();
  return VOCP_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
vocp_status call(F f) {
  last_error.clear();
  try {
    f();
    return VOCP_OK;
  } catch (const vocp::Error& e) {
    return fail(e);
  } catch (const json::exception& e) {
    return fail(vocp::Error(vocp::ErrorCode::kBadRequest, e.what()));
  } catch (const std::exception& e) {
    return fail(vocp::Error(vocp::ErrorCode::kInternal, e.what()));
  } catch (...) {
    return fail(vocp::Error(vocp::ErrorCode::kInternal, "unknown failure"));
  }
}

json parse_optional(const char* text) {
  if (!text || !*text) return json::object();
  return vocp::parse_body(text);
}

vocp::ServiceConfig resolve(const char* config_file, const char* overrides_json) {
  std::optional<std::filesystem::path> file;
  if (config_file && *config_file) file = config_file;
  return vocp::resolve_config(file, vocp::process_env, parse_optional(overrides_json));
}

}  // namespace

extern "C" {

const char* vocp_status_code(vocp_status status) {
  if (status == VOCP_OK) return "ok";
  if (status == VOCP_INVALID_ARGUMENT) return "invalid_argument";
  if (status < VOCP_OK || status > VOCP_INTERNAL) return "internal";
  return vocp::error_code_name(static_cast<vocp::ErrorCode>(static_cast<int>(status) - 1)).data();
}

const char* vocp_last_error(void) { return last_error.c_str(); }

void vocp_string_free(char* s) { std::free(s); }

vocp_status vocp_config_resolve(const char* config_file, const char* overrides_json, char** out) {
  if (!out) return invalid("out is NULL");
  return call([&] { *out = dup(vocp::config_to_json(resolve(config_file, overrides_json)).dump(2)); });
}

vocp_status vocp_engine_open(const char* config_file, const char* overrides_json, vocp_engine** out) {
  if (!out) return invalid("out is NULL");
  return call([&] {
    auto handle = std::make_unique<vocp_engine>();
    handle->engine = std::make_unique<vocp::Engine>(resolve(config_file, overrides_json));
    *out = handle.release();
  });
}

void vocp_engine_close(vocp_engine* engine) {
  if (!engine) return;
  engine->engine->shutdown();
  delete engine;
}

#define VOCP_REQUIRE(cond, what) \
  if (!(cond)) return invalid(what)

vocp_status vocp_ingest_file(vocp_engine* engine, const char* path, const char* corpus_id,
                             const char* meta_json, char** out) {
  VOCP_REQUIRE(engine && path && corpus_id && out, "engine, path, corpus_id and out are required");
  return call([&] {
    const auto meta = vocp::corpus_meta_from_json(parse_optional(meta_json));
    *out = dup(vocp::ingest_json(engine->engine->ingest_file(path, corpus_id, meta)).dump(2));
  });
}

vocp_status vocp_ingest_jsonl(vocp_engine* engine, const char* jsonl, size_t length, const char* corpus_id,
                              const char* meta_json, char** out) {
  VOCP_REQUIRE(engine && (jsonl || length == 0) && corpus_id && out,
               "engine, jsonl, corpus_id and out are required");
  return call([&] {
    const auto meta = vocp::corpus_meta_from_json(parse_optional(meta_json));
    *out = dup(vocp::ingest_json(engine->engine->ingest(std::string_view(jsonl ? jsonl : "", length),
                                                        corpus_id, meta))
                   .dump(2));
  });
}

vocp_status vocp_export_corpus(vocp_engine* engine, const char* corpus_id, char** out) {
  VOCP_REQUIRE(engine && corpus_id && out, "engine, corpus_id and out are required");
  return call([&] { *out = dup(engine->engine->export_corpus(corpus_id)); });
}

vocp_status vocp_derive(vocp_engine* engine, const char* corpus_id, char** out) {
  VOCP_REQUIRE(engine && corpus_id && out, "engine, corpus_id and out are required");
  return call([&] { *out = dup(vocp::personas_json(engine->engine->derive(corpus_id)).dump(2)); });
}

vocp_status vocp_list_personas(vocp_engine* engine, char** out) {
  VOCP_REQUIRE(engine && out, "engine and out are required");
  return call([&] { *out = dup(vocp::personas_json(engine->engine->personas()).dump(2)); });
}

vocp_status vocp_get_persona(vocp_engine* engine, const char* persona_id, char** out) {
  VOCP_REQUIRE(engine && persona_id && out, "engine, persona_id and out are required");
  return call([&] { *out = dup(vocp::to_json(engine->engine->persona(persona_id)).dump(2)); });
}

vocp_status vocp_card(vocp_engine* engine, const char* persona_id, const char* format, char** out) {
  VOCP_REQUIRE(engine && persona_id && out, "engine, persona_id and out are required");
  return call([&] {
    const std::string f = format ? format : "json";
    vocp::CardFormat cf;
    if (f == "json") {
      cf = vocp::CardFormat::kJson;
    } else if (f == "markdown" || f == "md") {
      cf = vocp::CardFormat::kMarkdown;
    } else {
      throw vocp::FieldError("format", "must be 'json' or 'markdown'");
    }
    *out = dup(vocp::render_card(engine->engine->card(persona_id), cf));
  });
}

vocp_status vocp_session_open(vocp_engine* engine, const char* persona_id, const char* mode, char** out) {
  VOCP_REQUIRE(engine && persona_id && out, "engine, persona_id and out are required");
  return call([&] {
    json request = json::object();
    if (mode) request["mode"] = mode;
    *out = dup(engine->engine->open_session(persona_id, vocp::mode_from_request(request)));
  });
}

vocp_status vocp_session_message(vocp_engine* engine, const char* session_id, const char* text, char** out) {
  VOCP_REQUIRE(engine && session_id && text && out, "engine, session_id, text and out are required");
  return call([&] { *out = dup(vocp::message_json(session_id, engine->engine->message(session_id, text)).dump(2)); });
}

vocp_status vocp_session_react(vocp_engine* engine, const char* session_id, const char* stimulus_json,
                               char** out) {
  VOCP_REQUIRE(engine && session_id && stimulus_json && out,
               "engine, session_id, stimulus_json and out are required");
  return call([&] {
    const auto stimulus = vocp::stimulus_from_request(vocp::parse_body(stimulus_json));
    *out = dup(vocp::reaction_json(session_id, engine->engine->react(session_id, stimulus)).dump(2));
  });
}

vocp_status vocp_session_summary(vocp_engine* engine, const char* session_id, char** out) {
  VOCP_REQUIRE(engine && session_id && out, "engine, session_id and out are required");
  return call([&] { *out = dup(vocp::to_json(engine->engine->summary(session_id)).dump(2)); });
}

vocp_status vocp_session_close(vocp_engine* engine, const char* session_id) {
  VOCP_REQUIRE(engine && session_id, "engine and session_id are required");
  return call([&] { engine->engine->close_session(session_id); });
}

vocp_status vocp_session_transcript_path(vocp_engine* engine, const char* session_id, char** out) {
  VOCP_REQUIRE(engine && session_id && out, "engine, session_id and out are required");
  return call([&] { *out = dup(engine->engine->transcript_path(session_id).string()); });
}

vocp_status vocp_audit_transcript(vocp_engine* engine, const char* path, const char* corpus_id, char** out) {
  VOCP_REQUIRE(engine && path && out, "engine, path and out are required");
  return call([&] {
    std::optional<std::string> cid;
    if (corpus_id && *corpus_id) cid = corpus_id;
    *out = dup(vocp::audit_json(engine->engine->audit_transcript(path, cid)).dump(2));
  });
}

vocp_status vocp_server_start(vocp_engine* engine, const char* host, int port, vocp_server** out) {
  VOCP_REQUIRE(engine && host && out, "engine, host and out are required");
  VOCP_REQUIRE(port >= 0 && port <= 65535, "port out of range");
  return call([&] {
    auto handle = std::make_unique<vocp_server>();
    handle->server = std::make_unique<vocp::HttpServer>(*engine->engine);
    handle->port = handle->server->bind(host, port);
    auto* server = handle->server.get();
    handle->thread = std::thread([server] { server->serve(); });
    server->wait_until_ready();
    *out = handle.release();
  });
}

int vocp_server_port(const vocp_server* server) { return server ? server->port : 0; }

void vocp_server_stop(vocp_server* server) {
  if (!server) return;
  server->server->stop();
  if (server->thread.joinable()) server->thread.join();
  delete server;
}

}  // extern "C"
