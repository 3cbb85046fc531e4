#include "fixture.hpp"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "synth/synth.hpp"

namespace testing_support {

std::filesystem::path fixture_dir() { return VOCP_FIXTURE_DIR; }

std::filesystem::path fixture_corpus_path() { return fixture_dir() / "fixture_corpus.jsonl"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TempDir::TempDir() {
  std::string pattern = (std::filesystem::temp_directory_path() / "vocp-test-XXXXXX").string();
  if (!mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

vocp::ServiceConfig test_config(const std::filesystem::path& data_dir) {
  vocp::ServiceConfig config;
  config.data_dir = data_dir;
  config.fixed_time = vocp::parse_rfc3339(kFixedTime);
  return config;
}

vocp::VocArtifact make_artifact(const std::string& id, const std::string& author, const std::string& text,
                                const std::string& created_at, const std::string& channel) {
  vocp::VocArtifact a;
  a.id = id;
  a.author_id = author;
  a.channel = channel;
  a.created_at = *vocp::parse_rfc3339(created_at);
  a.text = text;
  return a;
}

std::unique_ptr<FixtureEngine> make_fixture_engine(std::shared_ptr<const vocp::GenerationBackend> backend) {
  auto fx = std::make_unique<FixtureEngine>();
  fx->engine = std::make_unique<vocp::Engine>(test_config(fx->dir.path() / "data"), std::move(backend));
  fx->engine->ingest_file(fixture_corpus_path(), "fx");
  fx->personas = fx->engine->derive("fx");
  for (const auto& r : synth::fixture_records()) fx->topic_of[r.id] = r.topic;
  for (const auto& p : fx->personas) {
    std::map<std::string, std::size_t> counts;
    for (const auto& id : fx->engine->persona_context(p.persona_id)->member_ids) ++counts[fx->topic_of[id]];
    const auto best = std::max_element(counts.begin(), counts.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
    fx->persona_for_topic[best->first] = p.persona_id;
  }
  return fx;
}

}  // namespace testing_support
