#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "core/engine.hpp"

namespace testing_support {

std::filesystem::path fixture_dir();
std::filesystem::path fixture_corpus_path();
std::string read_file(const std::filesystem::path& path);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline constexpr const char* kFixedTime = "2024-07-01T00:00:00Z";

vocp::ServiceConfig test_config(const std::filesystem::path& data_dir);

vocp::VocArtifact make_artifact(const std::string& id, const std::string& author, const std::string& text,
                                const std::string& created_at = "2024-01-01T00:00:00Z",
                                const std::string& channel = "forum");

/// Engine over the committed fixture corpus ingested as "fx" and derived.
struct FixtureEngine {
  TempDir dir;
  std::unique_ptr<vocp::Engine> engine;
  std::vector<vocp::PersonaSegment> personas;
  /// Planted topic -> persona whose members are mostly that topic.
  std::map<std::string, std::string> persona_for_topic;
  /// Artifact id -> planted topic.
  std::map<std::string, std::string> topic_of;
};

std::unique_ptr<FixtureEngine> make_fixture_engine(
    std::shared_ptr<const vocp::GenerationBackend> backend = nullptr);

}  // namespace testing_support
