#include "synth/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <nlohmann/json.hpp>

namespace synth {
namespace {

const std::map<std::string, std::vector<std::string>>& slots() {
  static const std::map<std::string, std::vector<std::string>> s = {
      {"device", {"phone", "tablet", "laptop", "desktop", "work laptop", "old tablet"}},
      {"when", {"every morning", "after the last update", "on the train", "during meetings", "most days",
                "this week"}},
      {"doc", {"meeting notes", "recipe collection", "project plan", "journal", "reading list",
               "lecture notes"}},
      {"amount", {"twelve dollars", "forty dollars", "sixty dollars", "ninety dollars"}},
      {"plan", {"annual plan", "monthly plan", "family plan", "team plan"}},
      {"query", {"a tag", "a project name", "a phrase from a meeting", "a client name", "an old recipe"}},
      {"filetype", {"PDF", "scanned receipt", "whiteboard photo", "slide deck"}},
  };
  return s;
}

std::vector<Topic> build_topics() {
  std::vector<Topic> t;
  t.push_back({"sync",
               {
                   "Sync fails whenever the {device} goes offline.",
                   "Offline sync creates conflict copies of {doc}.",
                   "Offline edits vanish once sync finishes {when}.",
                   "Love how fast sync reconnects after offline work.",
                   "Sync conflict screens are confusing and frustrating.",
                   "Offline sync conflicts keep ruining {doc}.",
                   "Sync stalls offline on the {device} {when}.",
                   "Offline sync works great, sync catches up quickly.",
                   "Sync conflict duplicated {doc} three times.",
                   "Offline sync spinning drains battery on the {device}.",
                   "Sync conflict resolution overwrote newer offline edits.",
                   "Reliable offline sync is why I recommend this app.",
               },
               {
                   "How does sync behave offline on the {device}?",
                   "What happens to {doc} after a sync conflict?",
                   "Do offline edits survive sync {when}?",
                   "How reliable is offline sync on the {device}?",
                   "Tell me about sync conflicts and offline sync.",
               }});
  t.push_back({"billing",
               {
                   "Subscription billing jumped to {amount} without notice.",
                   "Billing charged twice on one invoice; refund took weeks.",
                   "Invoice billing for the {plan} lists removed seats.",
                   "Student discount makes subscription pricing fair, great value.",
                   "Cancelling a subscription is hidden, refund billing is terrible.",
                   "Happily paying {amount} for the {plan}, billing is transparent.",
                   "Invoice currency is wrong, billing support ignores tickets.",
                   "Surprise subscription renewal charged {amount} {when}.",
                   "Upgrading to the {plan} applied billing discount correctly, excellent.",
                   "Subscription pricing is too expensive versus rival apps.",
                   "Billing emails never arrive, every invoice is a surprise.",
                   "Refund requests for the {plan} subscription are slow, frustrating.",
               },
               {
                   "What do you think about {plan} subscription pricing?",
                   "How was a refund or billing invoice for you?",
                   "Is a subscription worth {amount}?",
                   "Tell me about billing surprises on the {plan}.",
                   "How do you feel about subscription discounts and billing?",
               }});
  t.push_back({"search",
               {
                   "Search never finds {query} in search results.",
                   "Full text search inside a {filetype} is amazing.",
                   "Search results ignore accents, searching {query} fails.",
                   "Search indexing is slow on the {device} {when}.",
                   "Love how search results highlight {query}.",
                   "Search filters by tag are broken, search results useless.",
                   "Searching {query} returns hundreds of irrelevant search results.",
                   "Searching inside a {filetype} finds forgotten text, impressive.",
                   "Saved searches disappear after search reindexing.",
                   "Search ranking puts ancient notes above {doc}.",
                   "Fuzzy search is helpful when searching misspelled {query}.",
                   "Search freezes while indexing a large {filetype}.",
               },
               {
                   "How well does search find {query}?",
                   "What is searching inside a {filetype} like?",
                   "Are search results useful when searching {query}?",
                   "Tell me about search speed and search indexing on the {device}.",
                   "How do search filters and search ranking work for you?",
               }});
  t.push_back({"accessibility",
               {
                   "The screen reader skips toolbar buttons and the contrast is too low.",
                   "Keyboard navigation traps focus inside the sidebar for screen reader users.",
                   "Dynamic type ignores my larger font setting.",
                   "Voice control cannot reach the formatting menu.",
               },
               {
                   "How does the app work with a screen reader?",
                   "Is the contrast and font scaling accessible for low vision?",
                   "Can you navigate everything with keyboard shortcuts and voice control?",
                   "What accessibility barriers do you hit?",
               },
               true});
  t.push_back({"calendar",
               {
                   "Calendar integration with Outlook drops meeting reminders.",
                   "Google Calendar events duplicate when linked to a notebook.",
                   "Recurring calendar appointments lose their attendees after import.",
                   "The calendar widget shows the wrong timezone for appointments.",
               },
               {
                   "How does the calendar integration handle recurring appointments?",
                   "Do Outlook or Google Calendar events import correctly?",
                   "What about timezone handling in calendar appointments?",
                   "How useful is the calendar widget for meeting attendees?",
               },
               true});
  return t;
}

const std::vector<std::string> kChannels = {"forum", "support_ticket", "review", "social"};

std::string timestamp(Rng& rng) {
  // 2024-01-01 .. 2024-06-30
  static const int days_in_month[] = {31, 29, 31, 30, 31, 30};
  const int month = static_cast<int>(rng.below(6));
  const int day = 1 + static_cast<int>(rng.below(days_in_month[month]));
  char buf[32];
  std::snprintf(buf, sizeof buf, "2024-%02d-%02dT%02d:%02d:%02dZ", month + 1, day, static_cast<int>(rng.below(24)),
                static_cast<int>(rng.below(60)), static_cast<int>(rng.below(60)));
  return buf;
}

std::string compose(const Topic& topic, Rng& rng, std::size_t sentences) {
  std::vector<std::size_t> chosen;
  while (chosen.size() < sentences) {
    const std::size_t i = rng.below(topic.sentences.size());
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) chosen.push_back(i);
  }
  std::string text;
  for (const auto i : chosen) {
    if (!text.empty()) text += ' ';
    text += fill(topic.sentences[i], rng);
  }
  return text;
}

}  // namespace

const std::vector<Topic>& topics() {
  static const std::vector<Topic> t = build_topics();
  return t;
}

std::string fill(const std::string& tmpl, Rng& rng) {
  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const auto open = tmpl.find('{', pos);
    if (open == std::string::npos) break;
    const auto close = tmpl.find('}', open);
    out.append(tmpl, pos, open - pos);
    out += rng.pick(slots().at(tmpl.substr(open + 1, close - open - 1)));
    pos = close + 1;
  }
  out.append(tmpl, pos);
  return out;
}

std::vector<Record> fixture_records(std::uint64_t seed) {
  Rng rng(seed);
  const auto& all = topics();
  // Authors 0-53 write on the covered topics (18 each), 54-59 on gap topics.
  std::vector<Record> records;
  std::vector<std::pair<std::size_t, std::size_t>> plan;  // (topic, author)
  for (std::size_t topic = 0; topic < 3; ++topic) {
    for (std::size_t n = 0; n < 96; ++n) plan.emplace_back(topic, topic * 18 + rng.below(18));
  }
  for (std::size_t topic = 3; topic < 5; ++topic) {
    for (std::size_t n = 0; n < 4; ++n) plan.emplace_back(topic, 54 + (topic - 3) * 3 + rng.below(3));
  }
  // Shuffle so topics interleave in id order.
  for (std::size_t i = plan.size() - 1; i > 0; --i) std::swap(plan[i], plan[rng.below(i + 1)]);

  std::map<std::size_t, std::size_t> gap_seen;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto& [topic_index, author] = plan[i];
    const Topic& topic = all[topic_index];
    Record r;
    char id[32];
    std::snprintf(id, sizeof id, "voc-%04zu", i + 1);
    r.id = id;
    char who[32];
    std::snprintf(who, sizeof who, "user-%03zu", author + 1);
    r.author_id = who;
    r.channel = rng.pick(kChannels);
    r.created_at = timestamp(rng);
    r.topic = topic.key;
    if (topic.gap) {
      r.text = topic.sentences[gap_seen[topic_index]++ % topic.sentences.size()];
    } else {
      r.text = compose(topic, rng, 2 + rng.below(2));
      if (rng.below(10) == 0) r.media_transcript = "Video transcript: " + compose(topic, rng, 1);
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<Record> bulk_records(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  const auto& all = topics();
  std::vector<Record> records;
  records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Record r;
    char id[32];
    std::snprintf(id, sizeof id, "bulk-%06zu", i);
    r.id = id;
    char who[32];
    std::snprintf(who, sizeof who, "user-%04zu", static_cast<std::size_t>(rng.below(1000)));
    r.author_id = who;
    r.channel = rng.pick(kChannels);
    r.created_at = timestamp(rng);
    const std::size_t n = 1 + rng.below(3);
    for (std::size_t s = 0; s < n; ++s) {
      const Topic& topic = all[rng.below(all.size())];
      if (!r.text.empty()) r.text += ' ';
      r.text += fill(rng.pick(topic.sentences), rng);
    }
    r.topic = "mixed";
    records.push_back(std::move(r));
  }
  return records;
}

std::string to_jsonl(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j = {{"id", r.id},
                                {"author_id", r.author_id},
                                {"channel", r.channel},
                                {"created_at", r.created_at},
                                {"text", r.text}};
    if (!r.media_transcript.empty()) j["media_transcript"] = r.media_transcript;
    j["lang"] = "en";
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<Question> questions(std::size_t per_kind, std::uint64_t seed) {
  Rng rng(seed);
  const auto& all = topics();
  std::vector<Question> out;
  for (std::size_t i = 0; i < per_kind; ++i) {
    const Topic& t = all[i % 3];
    out.push_back({fill(rng.pick(t.questions), rng), t.key, false});
  }
  for (std::size_t i = 0; i < per_kind; ++i) {
    const Topic& t = all[3 + i % 2];
    out.push_back({fill(rng.pick(t.questions), rng), t.key, true});
  }
  return out;
}

std::vector<std::string> fabricated_claims(std::size_t count, std::uint64_t seed) {
  static const std::vector<std::string> kClaims = {
      "The dark theme drains my battery overnight.",
      "Handwriting recognition turns my scribbles into Cyrillic letters.",
      "The desktop widget crashes whenever I plug in a second monitor.",
      "Printing a notebook produces blank pages on my inkjet.",
      "Emoji reactions in shared pages never show up for guests.",
      "The onboarding tutorial forced me to invite five coworkers.",
      "Voice memos recorded outside are full of wind noise.",
      "Templates for weekly planning vanished from the gallery.",
      "Two factor login codes arrive ten minutes late by text message.",
      "The browser clipper saves advertisements instead of articles.",
      "My cat walked across the keyboard and archived everything.",
      "Collaborative cursors lag behind by several seconds in shared pages.",
      "Markdown tables lose their alignment when pasted from a spreadsheet.",
      "The smartwatch companion shows yesterday's checklist.",
      "Password protected folders forget the password after a restart.",
      "Drawing tools make my stylus strokes look jagged.",
      "The translation feature turned my German quotes into gibberish.",
      "Comment threads collapse randomly while colleagues are typing.",
      "Pomodoro timer notifications ring twice at midnight.",
      "Image uploads rotate portrait photos sideways.",
      "Kanban columns reorder themselves after every refresh.",
      "The referral program never credited my invited friends.",
      "Archived workspaces reappear in the sidebar every Monday.",
      "Audio playback speed resets to normal after each chapter.",
  };
  static const std::vector<std::string> kPrefix = {"", "Honestly, ", "Also, ", "Frankly, "};
  Rng rng(seed);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng.pick(kPrefix) + kClaims[rng.below(kClaims.size())]);
  return out;
}

}  // namespace synth
