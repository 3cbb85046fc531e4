#include "core/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

#include "core/error.hpp"

namespace vocp {
namespace fs = std::filesystem;
namespace {

[[noreturn]] void bad(const std::string& key, const std::string& problem) {
  throw Error(ErrorCode::kBadConfig, "config '" + key + "': " + problem);
}

double as_real(const std::string& key, const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size()) return d;
  }
  bad(key, "expected a number");
}

std::size_t as_count(const std::string& key, const nlohmann::json& v) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::size_t>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return static_cast<std::size_t>(std::stoull(s));
    }
  }
  bad(key, "expected a non-negative integer");
}

std::string as_string(const std::string& key, const nlohmann::json& v) {
  if (!v.is_string()) bad(key, "expected a string");
  return v.get<std::string>();
}

void set_listen(ServiceConfig& config, const std::string& listen) {
  const auto colon = listen.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == listen.size()) {
    bad("listen", "expected host:port");
  }
  const std::string port = listen.substr(colon + 1);
  if (!std::all_of(port.begin(), port.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      port.size() > 5 || std::stoi(port) > 65535) {
    bad("listen", "port must be 0-65535");
  }
  config.listen_host = listen.substr(0, colon);
  config.listen_port = std::stoi(port);
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "data_dir", "tau_cluster", "tau_evidence", "tau_ground", "n_min",      "k",
      "min_cluster_size", "min_evidence", "backend", "endpoint", "listen", "fixed_time",
      "extra_risks"};
  return keys;
}

void apply_config_json(ServiceConfig& config, const nlohmann::json& layer) {
  if (layer.is_null()) return;
  if (!layer.is_object()) throw Error(ErrorCode::kBadConfig, "config layer must be a JSON object");
  for (const auto& [key, v] : layer.items()) {
    if (v.is_null()) continue;
    auto& t = config.thresholds;
    if (key == "data_dir") {
      config.data_dir = as_string(key, v);
    } else if (key == "tau_cluster") {
      t.tau_cluster = as_real(key, v);
    } else if (key == "tau_evidence") {
      t.tau_evidence = as_real(key, v);
    } else if (key == "tau_ground") {
      t.tau_ground = as_real(key, v);
    } else if (key == "n_min") {
      t.n_min = as_count(key, v);
    } else if (key == "k") {
      t.k = as_count(key, v);
    } else if (key == "min_cluster_size") {
      t.min_cluster_size = as_count(key, v);
    } else if (key == "min_evidence") {
      t.min_evidence = as_count(key, v);
    } else if (key == "backend") {
      const std::string b = as_string(key, v);
      if (b == "extractive") {
        config.backend = BackendKind::kExtractive;
      } else if (b == "external") {
        config.backend = BackendKind::kExternal;
      } else {
        bad(key, "expected 'extractive' or 'external'");
      }
    } else if (key == "endpoint") {
      config.endpoint = as_string(key, v);
    } else if (key == "listen") {
      set_listen(config, as_string(key, v));
    } else if (key == "fixed_time") {
      const auto ts = parse_rfc3339(as_string(key, v));
      if (!ts) bad(key, "expected an RFC 3339 timestamp");
      config.fixed_time = *ts;
    } else if (key == "extra_risks") {
      if (v.is_string()) {
        config.extra_risks.push_back(v.get<std::string>());
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& e) { return e.is_string(); })) {
        config.extra_risks = v.get<std::vector<std::string>>();
      } else {
        bad(key, "expected a string or array of strings");
      }
    } else {
      bad(key, "unknown key");
    }
  }
}

ServiceConfig resolve_config(const std::optional<fs::path>& config_file, const EnvLookup& env,
                             const nlohmann::json& overrides) {
  ServiceConfig config;
  if (config_file) {
    std::ifstream in(*config_file);
    if (!in) throw Error(ErrorCode::kBadConfig, "config file not found: " + config_file->string());
    const auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::kBadConfig, "config file is not valid JSON");
    apply_config_json(config, j);
  }
  if (env) {
    nlohmann::json layer = nlohmann::json::object();
    for (const auto& key : config_keys()) {
      std::string name = "VOCP_";
      for (char c : key) name.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      if (auto value = env(name)) layer[key] = *value;
    }
    apply_config_json(config, layer);
  }
  apply_config_json(config, overrides);
  validate_config(config);
  return config;
}

void validate_config(const ServiceConfig& config) {
  const auto& t = config.thresholds;
  if (!(t.tau_cluster > 0.0 && t.tau_cluster < 1.0)) bad("tau_cluster", "must lie in (0, 1)");
  if (!(t.tau_evidence >= -1.0 && t.tau_evidence <= 1.0)) bad("tau_evidence", "must lie in [-1, 1]");
  if (!(t.tau_ground > 0.0 && t.tau_ground <= 1.0)) bad("tau_ground", "must lie in (0, 1]");
  if (t.k < 1) bad("k", "must be at least 1");
  if (t.n_min < 1 || t.n_min > t.k) bad("n_min", "must lie in [1, k]");
  if (t.min_cluster_size < 1) bad("min_cluster_size", "must be at least 1");
  if (config.backend == BackendKind::kExternal && config.endpoint.empty()) {
    bad("endpoint", "required when backend is 'external'");
  }
  std::error_code ec;
  fs::create_directories(config.data_dir, ec);
  if (ec || !fs::is_directory(config.data_dir)) {
    bad("data_dir", "cannot create " + config.data_dir.string());
  }
  const fs::path probe = config.data_dir / ".write-probe";
  {
    std::ofstream out(probe);
    if (!out) bad("data_dir", config.data_dir.string() + " is not writable");
  }
  fs::remove(probe, ec);
}

nlohmann::json config_to_json(const ServiceConfig& config) {
  const auto& t = config.thresholds;
  nlohmann::json j = {
      {"data_dir", config.data_dir.string()},
      {"tau_cluster", t.tau_cluster},
      {"tau_evidence", t.tau_evidence},
      {"tau_ground", t.tau_ground},
      {"n_min", t.n_min},
      {"k", t.k},
      {"min_cluster_size", t.min_cluster_size},
      {"min_evidence", t.min_evidence},
      {"backend", config.backend == BackendKind::kExtractive ? "extractive" : "external"},
      {"endpoint", config.endpoint},
      {"listen", config.listen_host + ":" + std::to_string(config.listen_port)},
      {"extra_risks", config.extra_risks},
  };
  if (config.fixed_time) j["fixed_time"] = format_rfc3339(*config.fixed_time);
  return j;
}

}  // namespace vocp
