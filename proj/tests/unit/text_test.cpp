#include <gtest/gtest.h>

#include "core/lexicon.hpp"
#include "core/text.hpp"
#include "core/timestamp.hpp"
#include "oracles.hpp"

namespace vocp {
namespace {

TEST(SplitSentences, TwoTerminators) {
  EXPECT_EQ(split_sentences("A. B!"), (std::vector<std::string>{"A.", "B!"}));
}

TEST(SplitSentences, EmptyInput) { EXPECT_TRUE(split_sentences("").empty()); }

TEST(SplitSentences, ShortFragmentDropped) {
  EXPECT_TRUE(split_sentences("ok").empty());
  EXPECT_TRUE(split_sentences("  ok  ").empty());
  EXPECT_EQ(split_sentences("fine"), std::vector<std::string>{"fine"});
}

TEST(SplitSentences, TerminatorRunsAndEmbeddedDots) {
  EXPECT_EQ(split_sentences("Really?! Yes... version 2.5 works.  Done"),
            (std::vector<std::string>{"Really?!", "Yes...", "version 2.5 works.", "Done"}));
}

TEST(SplitSentences, NewlinesAreWhitespace) {
  EXPECT_EQ(split_sentences("First one.\nSecond one.\n\nThird"),
            (std::vector<std::string>{"First one.", "Second one.", "Third"}));
}

TEST(SplitSentences, MatchesOracleOnFixtureTexts) {
  const std::vector<std::string> texts = {
      "Sync fails whenever the phone goes offline. Offline sync creates conflict copies of journal.",
      "Wait... what?? It broke. ok",
      "  padded text without terminator  ",
      "a. b. c!",
  };
  for (const auto& t : texts) EXPECT_EQ(split_sentences(t), oracle::sentences(t)) << t;
}

TEST(Tokenize, LowercasesAndSplitsOnApostrophes) {
  EXPECT_EQ(tokenize_words("Don't STOP-now 42x"), (std::vector<std::string>{"don", "t", "stop", "now", "42x"}));
}

TEST(ContentWords, DropsStopwordsDigitsAndShortTokens) {
  EXPECT_EQ(content_words("The battery of my phone dies at 5 pm in 2024"),
            (std::vector<std::string>{"battery", "phone", "dies", "pm"}));
}

TEST(Stopwords, CoreWordsPresent) {
  for (const char* w : {"the", "and", "of", "my", "is", "with"}) EXPECT_TRUE(is_stopword(w)) << w;
  for (const char* w : {"battery", "sync", "search"}) EXPECT_FALSE(is_stopword(w)) << w;
}

TEST(TitleCase, CapitalisesEachWord) { EXPECT_EQ(title_case("battery life"), "Battery Life"); }

TEST(Lexicon, SizesAndPolarity) {
  EXPECT_GE(positive_lexicon_size(), 190u);
  EXPECT_GE(negative_lexicon_size(), 190u);
  EXPECT_EQ(lexicon_polarity("great"), 1);
  EXPECT_EQ(lexicon_polarity("terrible"), -1);
  EXPECT_EQ(lexicon_polarity("sync"), 0);
}

TEST(Timestamp, ParsesUtcAndOffsets) {
  const auto a = parse_rfc3339("2024-01-01T12:00:00Z");
  const auto b = parse_rfc3339("2024-01-01T14:00:00+02:00");
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(format_rfc3339(*a), "2024-01-01T12:00:00Z");
}

TEST(Timestamp, FractionalSecondsRoundTrip) {
  const auto t = parse_rfc3339("2024-03-05T01:02:03.250Z");
  ASSERT_TRUE(t);
  EXPECT_EQ(format_rfc3339(*t), "2024-03-05T01:02:03.25Z");
  EXPECT_EQ(month_key(*t), "2024-03");
}

TEST(Timestamp, RejectsMalformed) {
  for (const char* bad : {"yesterday", "2024-13-01T00:00:00Z", "2024-02-30T00:00:00Z", "2024-01-01 00:00:00",
                          "2024-01-01T00:00:00", "2024-01-01T24:00:00Z", ""}) {
    EXPECT_FALSE(parse_rfc3339(bad)) << bad;
  }
}

}  // namespace
}  // namespace vocp
