#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "core/evidence.hpp"
#include "core/timestamp.hpp"

namespace vocp {

struct Thresholds {
  double tau_cluster = 0.5;
  double tau_evidence = 0.35;
  double tau_ground = 0.74;
  std::size_t n_min = 3;
  std::size_t k = 8;
  std::size_t min_cluster_size = 5;
  std::size_t min_evidence = 5;

  TurnConfig turn_config() const { return {k, tau_evidence, n_min, tau_ground}; }
};

enum class BackendKind { kExtractive, kExternal };

struct ServiceConfig {
  std::filesystem::path data_dir = "vocp-data";
  Thresholds thresholds;
  BackendKind backend = BackendKind::kExtractive;
  std::string endpoint;
  std::string listen_host = "127.0.0.1";
  int listen_port = 8080;
  /// Pins every generated timestamp (cards, bundles) for reproducible runs.
  std::optional<Timestamp> fixed_time;
  /// Appended to the baseline risk list of every provenance card.
  std::vector<std::string> extra_risks;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the real process environment.
std::optional<std::string> process_env(const std::string& name);

/// Flat JSON keys accepted in config files, VOCP_* variables (upper-cased)
/// and override objects.
const std::vector<std::string>& config_keys();

/// Applies a flat JSON object onto `config`. Throws Error{kBadConfig} for
/// unknown keys or ill-typed values.
void apply_config_json(ServiceConfig& config, const nlohmann::json& layer);

/// Defaults < config file < VOCP_* environment < overrides, then validated.
ServiceConfig resolve_config(const std::optional<std::filesystem::path>& config_file,
                             const EnvLookup& env, const nlohmann::json& overrides);

/// Throws Error{kBadConfig} when a threshold is out of range or data_dir is
/// not writable (data_dir is created if missing).
void validate_config(const ServiceConfig& config);

nlohmann::json config_to_json(const ServiceConfig& config);

}  // namespace vocp
