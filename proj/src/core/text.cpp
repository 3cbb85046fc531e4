#include "core/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace vocp {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Fixed English list, sorted for binary search.
constexpr std::array<std::string_view, 127> kStopwords = {
    "a",       "about",   "above",  "after",   "again",   "against", "all",     "am",
    "an",      "and",     "any",    "are",     "as",      "at",      "be",      "because",
    "been",    "before",  "being",  "below",   "between", "both",    "but",     "by",
    "can",     "could",   "did",    "do",      "does",    "doing",   "don",     "down",
    "during",  "each",    "even",   "few",     "for",     "from",    "further", "get",
    "got",     "had",     "has",    "have",    "having",  "he",      "her",     "here",
    "hers",    "herself", "him",    "himself", "his",     "how",     "i",       "if",
    "in",      "into",    "is",     "it",      "its",     "itself",  "just",    "me",
    "more",    "most",    "much",   "my",      "myself",  "no",      "nor",     "not",
    "now",     "of",      "off",    "on",      "once",    "only",    "or",      "other",
    "our",     "ours",    "out",    "over",    "own",     "really",  "same",    "she",
    "should",  "so",      "some",   "such",    "than",    "that",    "the",     "their",
    "theirs",  "them",    "then",   "there",   "these",   "they",    "this",    "those",
    "through", "to",      "too",    "under",   "until",   "up",      "very",    "was",
    "we",      "were",    "what",   "when",    "where",   "which",   "while",   "who",
    "whom",    "why",     "will",   "with",    "would",   "you",     "your",
};

}  // namespace

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  auto emit = [&out](std::string_view piece) {
    std::string s = trim(piece);
    if (s.empty()) return;
    if (!is_terminator(s.back()) && s.size() < 3) return;
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_terminator(text[i])) {
      std::size_t j = i;
      while (j < text.size() && is_terminator(text[j])) ++j;
      if (j == text.size() || is_space(text[j])) {
        emit(text.substr(start, j - start));
        start = j;
      }
      i = j;
    } else {
      ++i;
    }
  }
  if (start < text.size()) emit(text.substr(start));
  return out;
}

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) != 0) {
      current.push_back(static_cast<char>(std::tolower(u)));
    } else if (c == '\'' && !current.empty()) {
      // "don't" splits into "don" and "t"
      out.push_back(current);
      current.clear();
    } else if (!current.empty()) {
      out.push_back(current);
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

bool is_stopword(std::string_view word) {
  return std::binary_search(kStopwords.begin(), kStopwords.end(), word);
}

std::vector<std::string> content_words(std::string_view text) {
  std::vector<std::string> out;
  for (auto& w : tokenize_words(text)) {
    if (w.size() < 2 || is_stopword(w)) continue;
    if (std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
    out.push_back(std::move(w));
  }
  return out;
}

std::set<std::string> content_word_set(std::string_view text) {
  auto words = content_words(text);
  return {std::make_move_iterator(words.begin()), std::make_move_iterator(words.end())};
}

std::string title_case(std::string_view text) {
  std::string out(text);
  bool at_word_start = true;
  for (char& c : out) {
    if (std::isalnum(static_cast<unsigned char>(c)) != 0) {
      if (at_word_start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      at_word_start = false;
    } else {
      at_word_start = true;
    }
  }
  return out;
}

}  // namespace vocp
