// vocp command line. Talks to the engine only through the C API.
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vocp/vocp.h"

namespace {

using nlohmann::json;

struct CliFailure {
  int exit_code;
};

std::string error_text(vocp_status status) {
  const std::string body = vocp_last_error();
  const auto j = json::parse(body, nullptr, false);
  std::string text = std::string(vocp_status_code(status));
  if (j.is_object() && j.contains("message")) text += ": " + j["message"].get<std::string>();
  return text;
}

void check(vocp_status status) {
  if (status == VOCP_OK) return;
  std::cerr << "vocp: " << error_text(status) << '\n';
  throw CliFailure{1};
}

// Owns a string returned by the library.
class Owned {
 public:
  Owned() = default;
  ~Owned() { vocp_string_free(s_); }
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  char** out() { return &s_; }
  std::string str() const { return s_ ? s_ : ""; }

 private:
  char* s_ = nullptr;
};

class EngineHandle {
 public:
  EngineHandle(const std::string& config_file, const json& overrides) {
    check(vocp_engine_open(config_file.empty() ? nullptr : config_file.c_str(), overrides.dump().c_str(), &e_));
  }
  ~EngineHandle() { vocp_engine_close(e_); }
  EngineHandle(const EngineHandle&) = delete;
  EngineHandle& operator=(const EngineHandle&) = delete;
  vocp_engine* get() const { return e_; }

 private:
  vocp_engine* e_ = nullptr;
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "vocp: io_error: cannot write " << out_path << '\n';
    throw CliFailure{1};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "vocp: io_error: file not found: " << path << '\n';
    throw CliFailure{1};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_turn(const json& turn) {
  if (turn.at("kind") == "abstained") {
    std::cout << "[abstained] " << turn.at("abstain_note").get<std::string>() << '\n';
    return;
  }
  for (const auto& claim : turn.at("claims")) {
    std::cout << "- " << claim.at("text").get<std::string>();
    for (const auto& c : claim.at("citations")) std::cout << " [" << c.get<std::string>() << ']';
    std::cout << '\n';
  }
}

void print_audit(const json& audit) {
  for (const auto& turn : audit.at("turns")) {
    std::cout << "turn " << turn.at("turn_index").get<std::size_t>() << " (" << turn.value("type", "?")
              << "): " << (turn.at("pass").get<bool>() ? "pass" : "FAIL") << '\n';
    if (turn.contains("error")) std::cout << "  error: " << turn.at("error").get<std::string>() << '\n';
    if (!turn.contains("report")) continue;
    for (const auto& claim : turn.at("report").at("claims")) {
      char score[32];
      std::snprintf(score, sizeof score, "%.4f", claim.at("max_support").get<double>());
      std::cout << "  " << (claim.at("grounded").get<bool>() ? "grounded  " : "UNGROUNDED") << ' ' << score
                << "  " << claim.at("claim").get<std::string>() << '\n';
    }
  }
  std::cout << "overall: " << (audit.at("pass").get<bool>() ? "pass" : "fail") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evidence-grounded synthetic persona engine"};
  app.require_subcommand(1);

  std::string config_file;
  std::optional<std::string> data_dir, backend, endpoint, listen, fixed_time;
  std::optional<double> tau_cluster, tau_evidence, tau_ground;
  std::optional<long> n_min, k, min_cluster_size, min_evidence;
  bool json_output = false;

  app.add_option("--config", config_file, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--data-dir", data_dir, "State directory");
  app.add_option("--tau-cluster", tau_cluster);
  app.add_option("--tau-evidence", tau_evidence);
  app.add_option("--tau-ground", tau_ground);
  app.add_option("--n-min", n_min);
  app.add_option("-k,--k", k, "Evidence items retrieved per query");
  app.add_option("--min-cluster-size", min_cluster_size);
  app.add_option("--min-evidence", min_evidence);
  app.add_option("--backend", backend, "extractive | external");
  app.add_option("--endpoint", endpoint, "External backend URL");
  app.add_option("--listen", listen, "host:port for serve");
  app.add_option("--fixed-time", fixed_time, "Pin the clock (RFC 3339) for reproducible output");

  auto* ingest = app.add_subcommand("ingest", "Import a JSONL artifact feed as a corpus");
  std::string ingest_path, ingest_id;
  std::vector<std::string> platforms, methods;
  ingest->add_option("path", ingest_path)->required();
  ingest->add_option("--corpus-id", ingest_id, "Defaults to the file stem");
  ingest->add_option("--platform", platforms);
  ingest->add_option("--collection-method", methods);

  auto* derive = app.add_subcommand("derive", "Cluster topics and derive personas");
  std::string derive_id;
  derive->add_option("corpus_id", derive_id)->required();

  auto* interview = app.add_subcommand("interview", "Interview a persona; one message per stdin line");
  std::string interview_persona;
  interview->add_option("persona_id", interview_persona)->required();
  interview->add_flag("--json", json_output, "Print each turn as JSON");

  auto* react = app.add_subcommand("react", "Simulate a persona's reaction to a stimulus file");
  std::string react_persona, react_file;
  react->add_option("persona_id", react_persona)->required();
  react->add_option("stimulus", react_file)->required();

  auto* card = app.add_subcommand("card", "Render a persona provenance card");
  std::string card_persona, card_format = "json", card_out;
  card->add_option("persona_id", card_persona)->required();
  card->add_option("--format", card_format)->check(CLI::IsMember({"json", "md", "markdown"}));
  card->add_option("--out", card_out);

  auto* audit = app.add_subcommand("audit", "Re-verify a stored transcript");
  std::string audit_file, audit_corpus;
  audit->add_option("session_file", audit_file)->required();
  audit->add_option("--corpus", audit_corpus, "Corpus id when no session header is present");
  audit->add_flag("--json", json_output, "Print the full report as JSON");

  auto* serve = app.add_subcommand("serve", "Run the HTTP gateway");

  auto* export_cmd = app.add_subcommand("export", "Write a corpus back out as JSONL");
  std::string export_id, export_out;
  export_cmd->add_option("corpus_id", export_id)->required();
  export_cmd->add_option("--out", export_out);

  CLI11_PARSE(app, argc, argv);

  json overrides = json::object();
  if (data_dir) overrides["data_dir"] = *data_dir;
  if (tau_cluster) overrides["tau_cluster"] = *tau_cluster;
  if (tau_evidence) overrides["tau_evidence"] = *tau_evidence;
  if (tau_ground) overrides["tau_ground"] = *tau_ground;
  if (n_min) overrides["n_min"] = *n_min;
  if (k) overrides["k"] = *k;
  if (min_cluster_size) overrides["min_cluster_size"] = *min_cluster_size;
  if (min_evidence) overrides["min_evidence"] = *min_evidence;
  if (backend) overrides["backend"] = *backend;
  if (endpoint) overrides["endpoint"] = *endpoint;
  if (listen) overrides["listen"] = *listen;
  if (fixed_time) overrides["fixed_time"] = *fixed_time;

  try {
    if (*serve) {
      // Block before any thread exists so only sigwait sees them.
      sigset_t signals;
      sigemptyset(&signals);
      sigaddset(&signals, SIGINT);
      sigaddset(&signals, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &signals, nullptr);

      EngineHandle engine(config_file, overrides);
      Owned resolved;
      check(vocp_config_resolve(config_file.empty() ? nullptr : config_file.c_str(), overrides.dump().c_str(),
                                resolved.out()));
      const std::string addr = json::parse(resolved.str()).at("listen").get<std::string>();
      const auto colon = addr.rfind(':');
      vocp_server* server = nullptr;
      check(vocp_server_start(engine.get(), addr.substr(0, colon).c_str(), std::stoi(addr.substr(colon + 1)),
                              &server));
      std::cerr << "vocp: listening on " << addr.substr(0, colon) << ':' << vocp_server_port(server) << '\n';
      int sig = 0;
      sigwait(&signals, &sig);
      std::cerr << "vocp: shutting down\n";
      vocp_server_stop(server);
      return 0;
    }

    EngineHandle engine(config_file, overrides);
    Owned out;

    if (*ingest) {
      if (ingest_id.empty()) ingest_id = std::filesystem::path(ingest_path).stem().string();
      json meta = json::object();
      if (!platforms.empty()) meta["platforms"] = platforms;
      if (!methods.empty()) meta["collection_methods"] = methods;
      check(vocp_ingest_file(engine.get(), ingest_path.c_str(), ingest_id.c_str(), meta.dump().c_str(), out.out()));
      const json result = json::parse(out.str());
      for (const auto& d : result.at("skipped_lines")) {
        std::cerr << "vocp: line " << d.at("line").get<std::size_t>() << ": " << d.at("code").get<std::string>()
                  << ": " << d.at("message").get<std::string>() << '\n';
      }
      write_output(out.str(), "");
    } else if (*derive) {
      check(vocp_derive(engine.get(), derive_id.c_str(), out.out()));
      write_output(out.str(), "");
    } else if (*interview) {
      check(vocp_session_open(engine.get(), interview_persona.c_str(), "interview", out.out()));
      const std::string sid = out.str();
      std::cerr << "vocp: session " << sid << " with " << interview_persona << "; end input to finish\n";
      int exit_code = 0;
      std::string line;
      while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Owned turn;
        const vocp_status st = vocp_session_message(engine.get(), sid.c_str(), line.c_str(), turn.out());
        if (st != VOCP_OK) {
          std::cerr << "vocp: " << error_text(st) << '\n';
          exit_code = 1;
          continue;
        }
        if (json_output) {
          std::cout << json::parse(turn.str()).dump() << '\n';
        } else {
          print_turn(json::parse(turn.str()));
        }
        std::cout.flush();
      }
      Owned transcript;
      check(vocp_session_close(engine.get(), sid.c_str()));
      check(vocp_session_transcript_path(engine.get(), sid.c_str(), transcript.out()));
      std::cerr << "vocp: transcript " << transcript.str() << '\n';
      return exit_code;
    } else if (*react) {
      const std::string stimulus = read_file(react_file);
      check(vocp_session_open(engine.get(), react_persona.c_str(), "reaction", out.out()));
      const std::string sid = out.str();
      Owned report;
      check(vocp_session_react(engine.get(), sid.c_str(), stimulus.c_str(), report.out()));
      check(vocp_session_close(engine.get(), sid.c_str()));
      write_output(report.str(), "");
    } else if (*card) {
      check(vocp_card(engine.get(), card_persona.c_str(), card_format.c_str(), out.out()));
      write_output(out.str(), card_out);
    } else if (*audit) {
      check(vocp_audit_transcript(engine.get(), audit_file.c_str(),
                                  audit_corpus.empty() ? nullptr : audit_corpus.c_str(), out.out()));
      const json result = json::parse(out.str());
      if (json_output) {
        write_output(out.str(), "");
      } else {
        print_audit(result);
      }
      return result.at("pass").get<bool>() ? 0 : 1;
    } else if (*export_cmd) {
      check(vocp_export_corpus(engine.get(), export_id.c_str(), out.out()));
      write_output(out.str(), export_out);
    }
  } catch (const CliFailure& f) {
    return f.exit_code;
  }
  return 0;
}
