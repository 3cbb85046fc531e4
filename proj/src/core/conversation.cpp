#include "core/conversation.hpp"

#include <algorithm>
#include <set>

#include "core/embedding.hpp"
#include "core/error.hpp"
#include "core/text.hpp"

namespace vocp {

Session::Session(std::string session_id, std::string persona_id, InteractionMode mode,
                 Timestamp created_at, SessionHooks hooks, std::vector<TurnRecord> turns)
    : session_id_(std::move(session_id)),
      persona_id_(std::move(persona_id)),
      mode_(mode),
      created_at_(created_at),
      hooks_(std::move(hooks)),
      turns_(std::move(turns)) {}

std::vector<TurnRecord> Session::turns() const {
  std::lock_guard lock(data_mutex_);
  return turns_;
}

std::size_t Session::turn_count() const {
  std::lock_guard lock(data_mutex_);
  return turns_.size();
}

void Session::wait_idle() { std::lock_guard lock(turn_mutex_); }

std::unique_lock<std::mutex> Session::begin_turn() {
  if (closed()) throw Error(ErrorCode::kSessionClosed, "session '" + session_id_ + "' is closed");
  std::unique_lock lock(turn_mutex_, std::try_to_lock);
  if (!lock.owns_lock()) {
    throw Error(ErrorCode::kBusy, "session '" + session_id_ + "' already has a turn in flight");
  }
  return lock;
}

void Session::append(TurnRecord record) {
  if (hooks_.on_turn) hooks_.on_turn(record);
  std::lock_guard lock(data_mutex_);
  turns_.push_back(std::move(record));
}

std::string abstain_note(const PersonaContext& context, std::string_view message) {
  std::vector<std::pair<double, const std::string*>> ranked;
  const auto query = embed_text(message);
  for (const auto& [label, vec] : context.covered_labels) {
    ranked.emplace_back(cosine_similarity(query, vec), &label);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return *a.second < *b.second;
  });
  std::string labels;
  for (std::size_t i = 0; i < ranked.size() && i < kAbstainNoteLabels; ++i) {
    if (i > 0) labels += ", ";
    labels += *ranked[i].second;
  }
  if (labels.empty()) labels = "no documented topics yet";
  return std::string(kAbstainPrefix) + labels + ".";
}

PersonaResponse answer_turn(Session& session, std::string_view message, const PersonaContext& context,
                            const GenerationBackend& backend, const TurnConfig& config, Timestamp now,
                            TurnTrace* trace) {
  const std::string question = trim(message);
  if (question.empty()) throw Error(ErrorCode::kEmptyMessage, "message is empty");
  auto turn_lock = session.begin_turn();

  const std::size_t turn_index = session.turn_count();
  EvidenceBundle bundle = retrieve_evidence(context, question, config.k, now,
                                            session.session_id() + "/" + std::to_string(turn_index));

  PersonaResponse response;
  response.bundle_ref = bundle.bundle_id;
  VerificationReport report;

  if (sufficiency_gate(bundle, config.tau_evidence, config.n_min) == GateOutcome::kProceed) {
    DraftResponse draft;
    try {
      draft = backend.generate({context.persona, question, bundle, session.mode()});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoUsableSentence) throw;
    }
    for (const auto& rejected : draft.rejected) {
      if (session.hooks_.on_audit) {
        session.hooks_.on_audit({session.session_id(), turn_index, "rejected_unknown_citation",
                                 rejected.text, rejected.source_id, 0.0});
      }
    }

    PersonaResponse candidate;
    for (const auto& s : draft.sentences) candidate.claims.push_back({s.text, {s.source_id}, 0.0});
    report = verify_response(candidate, bundle, config.tau_ground);

    for (std::size_t i = 0; i < candidate.claims.size(); ++i) {
      const auto& v = report.claims[i];
      if (v.grounded) {
        Claim claim = candidate.claims[i];
        claim.support_score = v.max_support;
        response.claims.push_back(std::move(claim));
      } else if (session.hooks_.on_audit) {
        session.hooks_.on_audit({session.session_id(), turn_index, "redacted_ungrounded",
                                 v.claim_text, v.best_artifact_id, v.max_support});
      }
    }
    report.redacted_count = (candidate.claims.size() - response.claims.size()) + draft.rejected.size();
  }

  if (response.claims.empty()) {
    response.kind = ResponseKind::kAbstained;
    response.abstain_note = abstain_note(context, question);
  } else {
    response.kind = ResponseKind::kAnswered;
  }

  TurnRecord record;
  record.turn_index = turn_index;
  record.type = TurnType::kMessage;
  record.message = question;
  record.response = response;
  record.bundle_ids_scores = bundle.ids_scores();
  record.verification = report;
  session.append(std::move(record));

  if (trace != nullptr) *trace = {turn_index, std::move(bundle), std::move(report)};
  return response;
}

ReactionReport react_turn(Session& session, const ReactionStimulus& stimulus,
                          const PersonaContext& context, const TurnConfig& config, Timestamp now,
                          std::size_t* turn_index) {
  auto turn_lock = session.begin_turn();
  ReactionReport report = simulate_reaction(context, stimulus, config, now);

  TurnRecord record;
  record.turn_index = session.turn_count();
  record.type = TurnType::kReaction;
  record.message = stimulus.title.empty() ? trim(stimulus.content) : stimulus.title;
  record.stimulus = stimulus;
  record.reaction = report;
  const std::size_t index = record.turn_index;
  session.append(std::move(record));
  if (turn_index != nullptr) *turn_index = index;
  return report;
}

ConversationSummary summarize_session(const Session& session) {
  ConversationSummary summary;
  summary.session_id = session.session_id();
  summary.persona_id = session.persona_id();
  std::set<std::string> sources;
  for (const auto& turn : session.turns()) {
    SummaryTurn st;
    st.turn_index = turn.turn_index;
    st.type = turn.type;
    st.question = turn.message;
    if (turn.type == TurnType::kReaction && turn.reaction) {
      st.kind = "reaction";
      st.facets = turn.reaction->facets;
      for (const auto& f : st.facets) sources.insert(f.citations.begin(), f.citations.end());
    } else {
      st.kind = std::string(response_kind_name(turn.response.kind));
      st.claims = turn.response.claims;
      st.abstain_note = turn.response.abstain_note;
      for (const auto& c : st.claims) sources.insert(c.citations.begin(), c.citations.end());
    }
    summary.turns.push_back(std::move(st));
  }
  summary.sources.assign(sources.begin(), sources.end());
  return summary;
}

}  // namespace vocp
