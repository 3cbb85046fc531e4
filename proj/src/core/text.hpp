#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vocp {

std::string trim(std::string_view text);

/// ASCII-only lowercasing; bytes >= 0x80 pass through untouched.
std::string ascii_lower(std::string_view text);

/// Sentence splitter shared by generation, grounding and reaction facets.
///
/// A boundary is one of '.', '!', '?' (runs of them count once) followed by
/// whitespace or end of text. Pieces are trimmed. A piece that does not end in
/// a terminator is a fragment and is dropped when shorter than 3 characters;
/// terminated pieces ("A.") are always kept.
std::vector<std::string> split_sentences(std::string_view text);

/// Lowercased alphanumeric word tokens in order of appearance.
std::vector<std::string> tokenize_words(std::string_view text);

bool is_stopword(std::string_view word);

/// Tokens that are not stopwords, not pure digits and at least 2 characters.
std::vector<std::string> content_words(std::string_view text);
std::set<std::string> content_word_set(std::string_view text);

/// Title-cases the first letter of each word ("battery life" -> "Battery Life").
std::string title_case(std::string_view text);

}  // namespace vocp
