#pragma once

#include <string_view>

namespace vocp {

/// +1 for a positive lexicon word, -1 for a negative one, 0 otherwise.
/// Expects a lowercased token.
int lexicon_polarity(std::string_view word);

std::size_t positive_lexicon_size();
std::size_t negative_lexicon_size();

}  // namespace vocp
