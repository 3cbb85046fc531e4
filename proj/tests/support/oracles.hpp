#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

// Independent reference computations used as test oracles. These are written
// from the behavioural definitions, not by calling the code under test.
namespace oracle {

/// Sparse trigram bag: bucket -> count.
std::map<std::size_t, double> bag(const std::string& text);

/// Dense unit vector from bag().
std::vector<double> embed(const std::string& text);

double dot(const std::vector<double>& a, const std::vector<double>& b);

/// Buckets with non-zero weight.
std::set<std::size_t> buckets(const std::string& text);

struct Ranked {
  std::string id;
  double score = 0.0;
};

/// Full sort of every candidate by (score desc, id asc), truncated to k.
/// Scores are rounded to 12 decimal places so exact-arithmetic ties stay ties.
std::vector<Ranked> linear_scan(const std::vector<std::string>& ids, const std::vector<std::vector<double>>& vectors,
                                const std::vector<double>& query, std::size_t k);

/// Sentences ending in . ! ? followed by whitespace or end; unterminated
/// pieces under 3 characters dropped.
std::vector<std::string> sentences(const std::string& text);

/// Lowercased ASCII alphanumeric runs.
std::vector<std::string> words(const std::string& text);

struct Candidate {
  std::string sentence;
  std::string artifact_id;
  std::size_t position = 0;
  double score = 0.0;
};

/// Scores every sentence of every (id, text) pair against `question`,
/// sorts all of them and keeps the first three.
std::vector<Candidate> best_sentences(const std::string& question,
                                      const std::vector<std::pair<std::string, std::string>>& evidence);

/// Finds `count` word-disjoint strings whose trigram buckets are pairwise
/// disjoint, drawing words from a seeded pseudo-random alphabet soup.
std::vector<std::string> bucket_disjoint_texts(std::size_t count, std::size_t words_each, std::uint64_t seed);

}  // namespace oracle
