#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

namespace oracle {
namespace {

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool word_byte(unsigned char c) { return c >= 0x80 || std::isalnum(c); }

// Splits a UTF-8 string into code points.
std::vector<std::string> code_points(const std::string& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t n = 1;
    const auto c = static_cast<unsigned char>(s[i]);
    if (c >= 0xF0) {
      n = 4;
    } else if (c >= 0xE0) {
      n = 3;
    } else if (c >= 0xC0) {
      n = 2;
    }
    out.push_back(s.substr(i, n));
    i += n;
  }
  return out;
}

void add_grams(const std::string& word, std::map<std::size_t, double>& out) {
  const auto cps = code_points(word);
  if (cps.size() < 3) {
    out[fnv(word) % 256] += 1;
    return;
  }
  for (std::size_t i = 0; i + 3 <= cps.size(); ++i) out[fnv(cps[i] + cps[i + 1] + cps[i + 2]) % 256] += 1;
}

}  // namespace

std::map<std::size_t, double> bag(const std::string& text) {
  std::string lower;
  for (unsigned char c : text) lower.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
  std::map<std::size_t, double> out;
  std::string word;
  for (unsigned char c : lower) {
    if (word_byte(c)) {
      word.push_back(static_cast<char>(c));
    } else if (!word.empty()) {
      add_grams(word, out);
      word.clear();
    }
  }
  if (!word.empty()) add_grams(word, out);
  if (out.empty()) {
    // No word characters: whitespace-collapsed, trimmed text is one word.
    std::string collapsed;
    for (unsigned char c : lower) {
      if (std::isspace(c)) {
        if (!collapsed.empty() && collapsed.back() != ' ') collapsed.push_back(' ');
      } else {
        collapsed.push_back(static_cast<char>(c));
      }
    }
    while (!collapsed.empty() && collapsed.back() == ' ') collapsed.pop_back();
    if (!collapsed.empty()) add_grams(collapsed, out);
  }
  return out;
}

std::vector<double> embed(const std::string& text) {
  std::vector<double> v(256, 0.0);
  for (const auto& [b, w] : bag(text)) v[b] = w;
  double n = 0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  if (n > 0) {
    for (double& x : v) x /= n;
  }
  return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::set<std::size_t> buckets(const std::string& text) {
  std::set<std::size_t> out;
  for (const auto& [b, w] : bag(text)) out.insert(b);
  return out;
}

std::vector<Ranked> linear_scan(const std::vector<std::string>& ids, const std::vector<std::vector<double>>& vectors,
                                const std::vector<double>& query, std::size_t k) {
  std::vector<Ranked> all;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    all.push_back({ids[i], std::round(dot(vectors[i], query) * 1e12) / 1e12});
  }
  std::sort(all.begin(), all.end(), [](const Ranked& a, const Ranked& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

std::vector<std::string> sentences(const std::string& text) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n\f\v");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r\n\f\v");
    return s.substr(b, e - b + 1);
  };
  std::vector<std::string> out;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    current.push_back(text[i]);
    const bool term = text[i] == '.' || text[i] == '!' || text[i] == '?';
    if (!term) continue;
    const bool next_term = i + 1 < text.size() && (text[i + 1] == '.' || text[i + 1] == '!' || text[i + 1] == '?');
    if (next_term) continue;
    const bool boundary = i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1]));
    if (!boundary) continue;
    const std::string piece = trim(current);
    if (!piece.empty()) out.push_back(piece);
    current.clear();
  }
  const std::string tail = trim(current);
  if (tail.size() >= 3) out.push_back(tail);
  return out;
}

std::vector<std::string> words(const std::string& text) {
  std::vector<std::string> out;
  std::string w;
  for (unsigned char c : text) {
    if (c < 0x80 && std::isalnum(c)) {
      w.push_back(static_cast<char>(std::tolower(c)));
    } else if (!w.empty()) {
      out.push_back(w);
      w.clear();
    }
  }
  if (!w.empty()) out.push_back(w);
  return out;
}

std::vector<Candidate> best_sentences(const std::string& question,
                                      const std::vector<std::pair<std::string, std::string>>& evidence) {
  const auto q = embed(question);
  std::vector<Candidate> all;
  for (const auto& [id, text] : evidence) {
    const auto parts = sentences(text);
    for (std::size_t p = 0; p < parts.size(); ++p) all.push_back({parts[p], id, p, dot(embed(parts[p]), q)});
  }
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.artifact_id != b.artifact_id) return a.artifact_id < b.artifact_id;
    return a.position < b.position;
  });
  if (all.size() > 3) all.resize(3);
  return all;
}

std::vector<std::string> bucket_disjoint_texts(std::size_t count, std::size_t words_each, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> texts(count);
  std::vector<std::set<std::size_t>> used(count);
  std::set<std::size_t> taken;
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t added = 0;
    for (int attempt = 0; added < words_each && attempt < 100000; ++attempt) {
      std::string w;
      for (int i = 0; i < 5; ++i) w.push_back(static_cast<char>('a' + rng() % 26));
      const auto b = buckets(w);
      if (std::any_of(b.begin(), b.end(), [&](std::size_t x) { return taken.contains(x); })) continue;
      taken.insert(b.begin(), b.end());
      texts[t] += (texts[t].empty() ? "" : " ") + w;
      ++added;
    }
  }
  return texts;
}

}  // namespace oracle
