#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Seeded synthetic VoC data: the committed fixture corpus, bulk corpora for
// load tests, and question sets. Uses raw mt19937_64 output only, so the same
// seed yields the same bytes on every platform.
namespace synth {

inline constexpr std::uint64_t kFixtureSeed = 20240611;

struct Topic {
  std::string key;
  std::vector<std::string> sentences;  // may contain {device}-style slots
  std::vector<std::string> questions;
  bool gap = false;
};

const std::vector<Topic>& topics();

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

/// Replaces {slot} markers with random fillers.
std::string fill(const std::string& tmpl, Rng& rng);

struct Record {
  std::string id;
  std::string author_id;
  std::string channel;
  std::string created_at;
  std::string text;
  std::string media_transcript;  // empty when absent
  std::string topic;
};

/// ~300 artifacts: three covered topics and two sparse gap topics.
std::vector<Record> fixture_records(std::uint64_t seed = kFixtureSeed);

/// `count` artifacts with random topic mixes, for scale tests.
std::vector<Record> bulk_records(std::size_t count, std::uint64_t seed);

std::string to_jsonl(const std::vector<Record>& records);

struct Question {
  std::string text;
  std::string topic;
  bool gap = false;
};

/// `per_kind` questions on covered topics and as many on gap topics.
std::vector<Question> questions(std::size_t per_kind, std::uint64_t seed);

/// Fabricated claims that no fixture artifact states.
std::vector<std::string> fabricated_claims(std::size_t count, std::uint64_t seed);

}  // namespace synth
