/* C interface to the persona engine.
 *
 * Every call returns a vocp_status. Results are JSON documents returned
 * through `char** out` and must be released with vocp_string_free. On
 * failure the thread-local vocp_last_error() holds a JSON error body
 * {"code", "message", "details"}.
 */
#ifndef VOCP_VOCP_H
#define VOCP_VOCP_H

#include <stddef.h>

#if defined(VOCP_BUILDING_LIBRARY)
#define VOCP_API __attribute__((visibility("default")))
#else
#define VOCP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vocp_engine vocp_engine;
typedef struct vocp_server vocp_server;

typedef enum vocp_status {
  VOCP_OK = 0,
  VOCP_MISSING_FIELD,
  VOCP_BAD_TIMESTAMP,
  VOCP_EMPTY_TEXT,
  VOCP_BAD_RECORD,
  VOCP_EMPTY_CORPUS,
  VOCP_DIMENSION_MISMATCH,
  VOCP_EMPTY_INDEX,
  VOCP_NO_PERSONAS,
  VOCP_UNKNOWN_CORPUS,
  VOCP_UNKNOWN_PERSONA,
  VOCP_UNKNOWN_SESSION,
  VOCP_UNKNOWN_ARTIFACT,
  VOCP_CORPUS_EXISTS,
  VOCP_CORPUS_MISMATCH,
  VOCP_NO_USABLE_SENTENCE,
  VOCP_BACKEND_UNAVAILABLE,
  VOCP_MALFORMED_BACKEND_REPLY,
  VOCP_EMPTY_MESSAGE,
  VOCP_SESSION_CLOSED,
  VOCP_BUSY,
  VOCP_UNKNOWN_CITATION,
  VOCP_NO_FACETS,
  VOCP_BAD_CONFIG,
  VOCP_BAD_REQUEST,
  VOCP_ADDRESS_IN_USE,
  VOCP_IO_ERROR,
  VOCP_INTERNAL,
  VOCP_INVALID_ARGUMENT
} vocp_status;

/* Stable machine-readable name, e.g. "unknown_persona". */
VOCP_API const char* vocp_status_code(vocp_status status);
/* JSON error body of the last failed call on this thread, or "" if none. */
VOCP_API const char* vocp_last_error(void);
VOCP_API void vocp_string_free(char* s);

/* Resolves defaults < config file < VOCP_* environment < overrides.
 * `config_file` and `overrides_json` may be NULL. Writes the effective
 * configuration as flat JSON. */
VOCP_API vocp_status vocp_config_resolve(const char* config_file, const char* overrides_json, char** out);

VOCP_API vocp_status vocp_engine_open(const char* config_file, const char* overrides_json,
                                      vocp_engine** out);
/* Waits for in-flight turns, then frees the engine. NULL is ignored. */
VOCP_API void vocp_engine_close(vocp_engine* engine);

/* `meta_json` may carry "platforms" and "collection_methods"; may be NULL. */
VOCP_API vocp_status vocp_ingest_file(vocp_engine* engine, const char* path, const char* corpus_id,
                                      const char* meta_json, char** out);
VOCP_API vocp_status vocp_ingest_jsonl(vocp_engine* engine, const char* jsonl, size_t length,
                                       const char* corpus_id, const char* meta_json, char** out);
/* Writes the corpus as JSONL (not JSON). */
VOCP_API vocp_status vocp_export_corpus(vocp_engine* engine, const char* corpus_id, char** out);

VOCP_API vocp_status vocp_derive(vocp_engine* engine, const char* corpus_id, char** out);
VOCP_API vocp_status vocp_list_personas(vocp_engine* engine, char** out);
VOCP_API vocp_status vocp_get_persona(vocp_engine* engine, const char* persona_id, char** out);
/* `format` is "json" or "markdown" ("md"); the output is the rendered card. */
VOCP_API vocp_status vocp_card(vocp_engine* engine, const char* persona_id, const char* format,
                               char** out);

/* `mode` is "interview" or "reaction"; NULL means interview. Writes the session id. */
VOCP_API vocp_status vocp_session_open(vocp_engine* engine, const char* persona_id, const char* mode,
                                       char** out);
VOCP_API vocp_status vocp_session_message(vocp_engine* engine, const char* session_id, const char* text,
                                          char** out);
/* `stimulus_json` is {"kind", "title", "content"} or {"stimulus": {...}}. */
VOCP_API vocp_status vocp_session_react(vocp_engine* engine, const char* session_id,
                                        const char* stimulus_json, char** out);
VOCP_API vocp_status vocp_session_summary(vocp_engine* engine, const char* session_id, char** out);
VOCP_API vocp_status vocp_session_close(vocp_engine* engine, const char* session_id);
/* Writes the transcript file path. */
VOCP_API vocp_status vocp_session_transcript_path(vocp_engine* engine, const char* session_id, char** out);

/* Re-verifies a stored transcript. `corpus_id` may be NULL to use the session
 * header next to the file. Returns VOCP_OK even when turns fail; check "pass". */
VOCP_API vocp_status vocp_audit_transcript(vocp_engine* engine, const char* path, const char* corpus_id,
                                           char** out);

/* Binds the HTTP gateway and serves on a background thread. Port 0 picks a
 * free port; see vocp_server_port. */
VOCP_API vocp_status vocp_server_start(vocp_engine* engine, const char* host, int port,
                                       vocp_server** out);
VOCP_API int vocp_server_port(const vocp_server* server);
/* Stops serving and frees the server. NULL is ignored. */
VOCP_API void vocp_server_stop(vocp_server* server);

#ifdef __cplusplus
}
#endif

#endif /* VOCP_VOCP_H */
