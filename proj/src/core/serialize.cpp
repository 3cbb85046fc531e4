#include "core/serialize.hpp"

#include "core/error.hpp"

namespace vocp {
namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw FieldError(name, "enclosing value is not an object");
  const auto it = j.find(name);
  if (it == j.end()) throw FieldError(name, "is required");
  return *it;
}

std::string str(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw FieldError(name, "must be a string");
  return v.get<std::string>();
}

std::size_t count(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw FieldError(name, "must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double real(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number()) throw FieldError(name, "must be a number");
  return v.get<double>();
}

std::vector<std::string> strings(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) throw FieldError(name, "must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw FieldError(name, "must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const json& array(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) throw FieldError(name, "must be an array");
  return v;
}

Timestamp timestamp(const json& j, const char* name) {
  const auto ts = parse_rfc3339(str(j, name));
  if (!ts) throw FieldError(name, "must be an RFC 3339 timestamp");
  return *ts;
}

std::optional<std::string> optional_str(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw FieldError(name, "must be a string or null");
  return it->get<std::string>();
}

}  // namespace

json to_json(const std::vector<ScoredId>& scored) {
  json out = json::array();
  for (const auto& s : scored) out.push_back({{"id", s.id}, {"score", s.score}});
  return out;
}

std::vector<ScoredId> scored_from_json(const json& j) {
  if (!j.is_array()) throw FieldError("ids_scores", "must be an array");
  std::vector<ScoredId> out;
  for (const auto& e : j) out.push_back({str(e, "id"), real(e, "score")});
  return out;
}

json to_json(const TopicCluster& c) {
  return {{"cluster_id", c.cluster_id},
          {"centroid", c.centroid.values},
          {"member_ids", c.member_ids},
          {"label_terms", c.label_terms}};
}

TopicCluster cluster_from_json(const json& j) {
  TopicCluster c;
  c.cluster_id = str(j, "cluster_id");
  const json& centroid = array(j, "centroid");
  for (const auto& x : centroid) {
    if (!x.is_number()) throw FieldError("centroid", "must be an array of numbers");
    c.centroid.values.push_back(x.get<double>());
  }
  c.member_ids = strings(j, "member_ids");
  c.label_terms = strings(j, "label_terms");
  return c;
}

json to_json(const PersonaSegment& p) {
  json coverage = json::object();
  for (const auto& [label, n] : p.coverage) coverage[label] = n;
  return {{"persona_id", p.persona_id},     {"name", p.name},
          {"cluster_ids", p.cluster_ids},   {"summary_terms", p.summary_terms},
          {"user_count", p.user_count},     {"message_count", p.message_count},
          {"coverage", std::move(coverage)}, {"gaps", p.gaps}};
}

PersonaSegment persona_from_json(const json& j) {
  PersonaSegment p;
  p.persona_id = str(j, "persona_id");
  p.name = str(j, "name");
  p.cluster_ids = strings(j, "cluster_ids");
  p.summary_terms = strings(j, "summary_terms");
  p.user_count = count(j, "user_count");
  p.message_count = count(j, "message_count");
  const json& coverage = field(j, "coverage");
  if (!coverage.is_object()) throw FieldError("coverage", "must be an object");
  for (const auto& [label, n] : coverage.items()) {
    if (!n.is_number_unsigned()) throw FieldError("coverage", "counts must be non-negative integers");
    p.coverage[label] = n.get<std::size_t>();
  }
  p.gaps = strings(j, "gaps");
  return p;
}

json to_json(const EvidenceBundle& b) {
  json items = json::array();
  for (const auto& item : b.items) {
    items.push_back({{"id", item.artifact.id},
                     {"score", item.score},
                     {"channel", item.artifact.channel},
                     {"author_id", item.artifact.author_id},
                     {"created_at", format_rfc3339(item.artifact.created_at)},
                     {"text", item.artifact.retrievable_text()}});
  }
  return {{"bundle_id", b.bundle_id},
          {"query_echo", b.query_echo},
          {"retrieved_at", format_rfc3339(b.retrieved_at)},
          {"ids_scores", to_json(b.ids_scores())},
          {"items", std::move(items)}};
}

json to_json(const PersonaResponse& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"text", c.text}, {"citations", c.citations}, {"support_score", c.support_score}});
  }
  return {{"kind", response_kind_name(r.kind)},
          {"claims", std::move(claims)},
          {"abstain_note", r.abstain_note ? json(*r.abstain_note) : json(nullptr)},
          {"bundle_ref", r.bundle_ref}};
}

PersonaResponse response_from_json(const json& j) {
  PersonaResponse r;
  const std::string kind = str(j, "kind");
  if (kind == "answered") {
    r.kind = ResponseKind::kAnswered;
  } else if (kind == "abstained") {
    r.kind = ResponseKind::kAbstained;
  } else {
    throw FieldError("kind", "must be 'answered' or 'abstained'");
  }
  for (const auto& c : array(j, "claims")) {
    r.claims.push_back({str(c, "text"), strings(c, "citations"), real(c, "support_score")});
  }
  r.abstain_note = optional_str(j, "abstain_note");
  r.bundle_ref = j.value("bundle_ref", "");
  return r;
}

json to_json(const VerificationReport& report) {
  json claims = json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"claim", c.claim_text},
                      {"max_support", c.max_support},
                      {"grounded", c.grounded},
                      {"best_artifact_id", c.best_artifact_id}});
  }
  return {{"claims", std::move(claims)},
          {"overall", report.pass ? "pass" : "fail"},
          {"redacted_count", report.redacted_count}};
}

VerificationReport verification_from_json(const json& j) {
  VerificationReport report;
  for (const auto& c : array(j, "claims")) {
    const json& grounded = field(c, "grounded");
    if (!grounded.is_boolean()) throw FieldError("grounded", "must be a boolean");
    report.claims.push_back(
        {str(c, "claim"), real(c, "max_support"), grounded.get<bool>(), str(c, "best_artifact_id")});
  }
  report.pass = str(j, "overall") == "pass";
  report.redacted_count = count(j, "redacted_count");
  return report;
}

json to_json(const ReactionStimulus& s) {
  return {{"kind", stimulus_kind_name(s.kind)}, {"title", s.title}, {"content", s.content}};
}

ReactionStimulus stimulus_from_json(const json& j) {
  ReactionStimulus s;
  const auto kind = parse_stimulus_kind(str(j, "kind"));
  if (!kind) {
    throw FieldError("kind",
                     "must be one of feature_idea, mockup_text, problem_statement, social_post, "
                     "landing_copy");
  }
  s.kind = *kind;
  s.title = j.contains("title") ? str(j, "title") : std::string();
  s.content = str(j, "content");
  if (s.content.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw FieldError("content", "must be non-empty");
  }
  return s;
}

json to_json(const ReactionReport& r) {
  json facets = json::array();
  for (const auto& f : r.facets) {
    facets.push_back({{"facet", f.facet},
                      {"stance", stance_name(f.stance)},
                      {"polarity", f.polarity},
                      {"citations", f.citations}});
  }
  return {{"facets", std::move(facets)}, {"overall_note", r.overall_note}};
}

ReactionReport reaction_from_json(const json& j) {
  ReactionReport r;
  for (const auto& f : array(j, "facets")) {
    const auto stance = parse_stance(str(f, "stance"));
    if (!stance) throw FieldError("stance", "unknown stance");
    r.facets.push_back({str(f, "facet"), *stance, real(f, "polarity"), strings(f, "citations")});
  }
  r.overall_note = str(j, "overall_note");
  return r;
}

json to_json(const TurnRecord& t) {
  json j = {{"turn_index", t.turn_index},
            {"type", t.type == TurnType::kMessage ? "message" : "reaction"},
            {"message", t.message}};
  if (t.type == TurnType::kMessage) {
    json response = to_json(t.response);
    response.erase("bundle_ref");
    j["response"] = std::move(response);
    j["bundle"] = {{"ids_scores", to_json(t.bundle_ids_scores)}};
    j["verification"] = to_json(t.verification);
  } else {
    if (t.stimulus) j["stimulus"] = to_json(*t.stimulus);
    if (t.reaction) j["reaction"] = to_json(*t.reaction);
  }
  return j;
}

TurnRecord turn_from_json(const json& j) {
  TurnRecord t;
  t.turn_index = count(j, "turn_index");
  const std::string type = str(j, "type");
  t.message = str(j, "message");
  if (type == "message") {
    t.type = TurnType::kMessage;
    t.response = response_from_json(field(j, "response"));
    t.bundle_ids_scores = scored_from_json(field(field(j, "bundle"), "ids_scores"));
    if (j.contains("verification")) t.verification = verification_from_json(j["verification"]);
  } else if (type == "reaction") {
    t.type = TurnType::kReaction;
    t.stimulus = stimulus_from_json(field(j, "stimulus"));
    t.reaction = reaction_from_json(field(j, "reaction"));
  } else {
    throw FieldError("type", "must be 'message' or 'reaction'");
  }
  return t;
}

json to_json(const ConversationSummary& s) {
  json turns = json::array();
  for (const auto& t : s.turns) {
    json entry = {{"turn_index", t.turn_index}, {"question", t.question}, {"kind", t.kind}};
    if (t.type == TurnType::kReaction) {
      entry["facets"] = to_json(ReactionReport{t.facets, {}})["facets"];
    } else {
      entry["claims"] = to_json(PersonaResponse{ResponseKind::kAnswered, t.claims, {}, {}})["claims"];
      entry["abstain_note"] = t.abstain_note ? json(*t.abstain_note) : json(nullptr);
    }
    turns.push_back(std::move(entry));
  }
  return {{"session_id", s.session_id},
          {"persona_id", s.persona_id},
          {"turns", std::move(turns)},
          {"sources", s.sources}};
}

json to_json(const ProvenanceCard& card) {
  json covered = json::array();
  for (const auto& [label, n] : card.topic_coverage.covered) {
    covered.push_back({{"label", label}, {"count", n}});
  }
  const auto& dp = card.data_provenance;
  return {
      {"persona_id", card.persona_id},
      {"generated_at", format_rfc3339(card.generated_at)},
      {"data_provenance",
       {{"channels", dp.channels},
        {"platforms", dp.platforms},
        {"collection_methods", dp.collection_methods},
        {"temporal_range",
         {{"min", format_rfc3339(dp.temporal_range.min)}, {"max", format_rfc3339(dp.temporal_range.max)}}}}},
      {"model_specifications",
       {{"backend", card.model_specifications.backend}, {"risks", card.model_specifications.risks}}},
      {"segment_metrics",
       {{"user_count", card.segment_metrics.user_count},
        {"message_count", card.segment_metrics.message_count}}},
      {"topic_coverage", {{"covered", std::move(covered)}, {"gaps", card.topic_coverage.gaps}}},
  };
}

ProvenanceCard card_from_json(const json& j) {
  ProvenanceCard card;
  card.persona_id = str(j, "persona_id");
  card.generated_at = timestamp(j, "generated_at");
  const json& dp = field(j, "data_provenance");
  card.data_provenance.channels = strings(dp, "channels");
  card.data_provenance.platforms = strings(dp, "platforms");
  card.data_provenance.collection_methods = strings(dp, "collection_methods");
  const json& range = field(dp, "temporal_range");
  card.data_provenance.temporal_range = {timestamp(range, "min"), timestamp(range, "max")};
  const json& ms = field(j, "model_specifications");
  card.model_specifications.backend = str(ms, "backend");
  card.model_specifications.risks = strings(ms, "risks");
  const json& sm = field(j, "segment_metrics");
  card.segment_metrics = {count(sm, "user_count"), count(sm, "message_count")};
  const json& tc = field(j, "topic_coverage");
  for (const auto& e : array(tc, "covered")) {
    card.topic_coverage.covered.emplace_back(str(e, "label"), count(e, "count"));
  }
  card.topic_coverage.gaps = strings(tc, "gaps");
  return card;
}

json to_json(const CorpusStats& stats) {
  return {{"per_channel", stats.per_channel},
          {"per_author", stats.per_author},
          {"per_month", stats.per_month}};
}

}  // namespace vocp
