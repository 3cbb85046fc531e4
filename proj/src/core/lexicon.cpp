#include "core/lexicon.hpp"

#include <algorithm>
#include <array>

namespace vocp {
namespace {

constexpr std::array<std::string_view, 203> kPositive = {
    "able", "accessible", "accurate", "adaptable", "admire", "affordable", "agile", "amazing",
    "appreciate", "attractive", "awesome", "beautiful", "beneficial", "best", "better",
    "bliss", "bright", "brilliant", "calm", "capable", "celebrate", "charming", "cheap",
    "clean", "clear", "clever", "comfortable", "compelling", "complete", "consistent",
    "convenient", "cool", "correct", "creative", "delight", "delighted", "delightful",
    "dependable", "easier", "easiest", "easy", "effective", "efficient", "effortless",
    "elegant", "empower", "enjoy", "enjoyable", "enjoyed", "enthusiastic", "excellent",
    "exceptional", "excited", "exciting", "exquisite", "fabulous", "fair", "fantastic", "fast",
    "faster", "favorite", "fine", "flawless", "flexible", "fluent", "fond", "free", "fresh",
    "friendly", "fun", "generous", "genius", "glad", "good", "gorgeous", "grateful", "great",
    "happy", "helped", "helpful", "ideal", "impressed", "impressive", "improve", "improved",
    "improvement", "incredible", "innovative", "inspiring", "intuitive", "joy", "keen", "kind",
    "lightweight", "like", "liked", "likes", "love", "loved", "lovely", "loves", "loving",
    "lucky", "magnificent", "marvelous", "neat", "nice", "nicer", "optimal", "outstanding",
    "painless", "peaceful", "perfect", "perfectly", "phenomenal", "pleasant", "pleased",
    "pleasing", "plus", "polished", "popular", "positive", "powerful", "practical", "praise",
    "precise", "premium", "pretty", "productive", "proud", "quick", "quicker", "quiet",
    "readable", "recommend", "recommended", "refined", "reliable", "relief", "remarkable",
    "responsive", "rewarding", "rich", "robust", "safe", "satisfied", "satisfying", "seamless",
    "secure", "sensible", "sharp", "simple", "simplest", "sleek", "slick", "smart", "smooth",
    "smoothly", "snappy", "solid", "sophisticated", "speedy", "splendid", "stable", "standout",
    "stellar", "straightforward", "strong", "stunning", "stylish", "success", "successful",
    "superb", "superior", "support", "supportive", "sure", "sweet", "swift", "terrific",
    "thank", "thanks", "thorough", "thrilled", "tidy", "top", "transparent", "trust",
    "trusted", "trustworthy", "understandable", "upgrade", "useful", "valuable", "versatile",
    "vibrant", "welcome", "well", "win", "wonderful", "worth", "worthwhile", "wow",
};

constexpr std::array<std::string_view, 200> kNegative = {
    "abysmal", "aggravating", "angry", "annoyed", "annoying", "anxious", "appalling",
    "atrocious", "awful", "awkward", "bad", "badly", "barely", "bloated", "boring", "broke",
    "broken", "buggy", "bugs", "bulky", "burden", "careless", "cheated", "clunky", "complain",
    "complaint", "complicated", "confused", "confusing", "corrupt", "corrupted", "costly",
    "crap", "crash", "crashed", "crashes", "crashing", "crippled", "cumbersome", "damaged",
    "dead", "defective", "degraded", "delay", "delayed", "deteriorated", "difficult",
    "disappoint", "disappointed", "disappointing", "disappointment", "disaster", "disconnects",
    "disgusted", "dislike", "drain", "drained", "drains", "dreadful", "dropped", "drops",
    "dull", "embarrassing", "error", "errors", "expensive", "fail", "failed", "failing",
    "fails", "failure", "fault", "faulty", "flaky", "flawed", "freezes", "freezing",
    "frustrated", "frustrating", "frustration", "garbage", "glitch", "glitches", "glitchy",
    "greedy", "gross", "hangs", "hard", "hassle", "hate", "hated", "hates", "headache",
    "horrible", "hostile", "hurt", "ignored", "impossible", "inaccurate", "inadequate",
    "incomplete", "inconsistent", "inconvenient", "ineffective", "inefficient", "inferior",
    "insane", "insecure", "irritating", "issue", "issues", "jammed", "junk", "lag", "lagging",
    "laggy", "lame", "leak", "lost", "mediocre", "meh", "mess", "messy", "mislead",
    "misleading", "missing", "mistake", "nasty", "negative", "nightmare", "noisy", "obsolete",
    "outage", "outrageous", "overheat", "overheating", "overpriced", "pain", "painful",
    "pathetic", "poor", "poorer", "poorly", "problem", "problems", "rage", "regret", "regrets",
    "ridiculous", "rip", "risky", "rude", "ruined", "sad", "scam", "scary", "shame", "shoddy",
    "slow", "slower", "sluggish", "sorry", "spam", "stale", "stressful", "struggle", "stuck",
    "stupid", "subpar", "suck", "sucks", "tedious", "terrible", "trash", "tricky", "trouble",
    "ugly", "unacceptable", "unavailable", "unbearable", "unclear", "uncomfortable", "unfair",
    "unfortunately", "unhappy", "unreliable", "unresponsive", "unstable", "unusable", "upset",
    "useless", "vague", "waste", "wasted", "weak", "worried", "worse", "worst", "worthless",
    "wrong",
};

}  // namespace

int lexicon_polarity(std::string_view word) {
  if (std::binary_search(kPositive.begin(), kPositive.end(), word)) return 1;
  if (std::binary_search(kNegative.begin(), kNegative.end(), word)) return -1;
  return 0;
}

std::size_t positive_lexicon_size() { return kPositive.size(); }
std::size_t negative_lexicon_size() { return kNegative.size(); }

}  // namespace vocp
