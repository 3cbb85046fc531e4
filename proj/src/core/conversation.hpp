#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/evidence.hpp"
#include "core/generation.hpp"
#include "core/grounding.hpp"
#include "core/reaction.hpp"
#include "core/response.hpp"

namespace vocp {

inline constexpr std::string_view kAbstainPrefix =
    "I don't have enough evidence to speak to that. I can speak to: ";
inline constexpr std::size_t kAbstainNoteLabels = 3;

enum class TurnType { kMessage, kReaction };

/// One recorded transcript line. Message turns carry response, bundle and
/// verification; reaction turns carry stimulus and report.
struct TurnRecord {
  std::size_t turn_index = 0;
  TurnType type = TurnType::kMessage;
  std::string message;
  PersonaResponse response;
  std::vector<ScoredId> bundle_ids_scores;
  VerificationReport verification;
  std::optional<ReactionStimulus> stimulus;
  std::optional<ReactionReport> reaction;
  bool operator==(const TurnRecord&) const = default;
};

struct AuditEvent {
  std::string session_id;
  std::size_t turn_index = 0;
  std::string kind;  // "redacted_ungrounded" | "rejected_unknown_citation"
  std::string text;
  std::string evidence_id;
  double support = 0.0;
};

/// Side outputs of one interview turn.
struct TurnTrace {
  std::size_t turn_index = 0;
  EvidenceBundle bundle;
  VerificationReport verification;
};

struct SessionHooks {
  /// Called with each record before it becomes visible; throwing aborts the turn.
  std::function<void(const TurnRecord&)> on_turn;
  std::function<void(const AuditEvent&)> on_audit;
};

/// Append-only interview or reaction session bound to one persona.
/// Turns within a session are serialised; a concurrent turn gets kBusy.
class Session {
 public:
  Session(std::string session_id, std::string persona_id, InteractionMode mode, Timestamp created_at,
          SessionHooks hooks = {}, std::vector<TurnRecord> turns = {});

  const std::string& session_id() const { return session_id_; }
  const std::string& persona_id() const { return persona_id_; }
  InteractionMode mode() const { return mode_; }
  Timestamp created_at() const { return created_at_; }

  std::vector<TurnRecord> turns() const;
  std::size_t turn_count() const;
  bool closed() const { return closed_.load(); }
  void close() { closed_.store(true); }
  /// Blocks until no turn is in flight.
  void wait_idle();

 private:
  friend PersonaResponse answer_turn(Session&, std::string_view, const PersonaContext&,
                                     const GenerationBackend&, const TurnConfig&, Timestamp,
                                     TurnTrace*);
  friend ReactionReport react_turn(Session&, const ReactionStimulus&, const PersonaContext&,
                                   const TurnConfig&, Timestamp, std::size_t*);

  std::unique_lock<std::mutex> begin_turn();
  void append(TurnRecord record);

  std::string session_id_;
  std::string persona_id_;
  InteractionMode mode_;
  Timestamp created_at_;
  SessionHooks hooks_;
  std::atomic<bool> closed_{false};
  std::mutex turn_mutex_;
  mutable std::mutex data_mutex_;
  std::vector<TurnRecord> turns_;
};

/// "I don't have enough evidence ... I can speak to: a, b, c." using the
/// covered labels closest to the message.
std::string abstain_note(const PersonaContext& context, std::string_view message);

/// One interview turn: retrieve within the persona, gate, generate or abstain,
/// verify and redact ungrounded claims, then record.
/// Throws Error{kEmptyMessage | kSessionClosed | kBusy | kBackendUnavailable};
/// a failed turn is not recorded.
PersonaResponse answer_turn(Session& session, std::string_view message, const PersonaContext& context,
                            const GenerationBackend& backend, const TurnConfig& config, Timestamp now,
                            TurnTrace* trace = nullptr);

/// Reaction simulation recorded as a reaction turn.
ReactionReport react_turn(Session& session, const ReactionStimulus& stimulus,
                          const PersonaContext& context, const TurnConfig& config, Timestamp now,
                          std::size_t* turn_index = nullptr);

struct SummaryTurn {
  std::size_t turn_index = 0;
  TurnType type = TurnType::kMessage;
  std::string question;
  std::string kind;  // answered | abstained | reaction
  std::vector<Claim> claims;
  std::optional<std::string> abstain_note;
  std::vector<FacetReaction> facets;
};

struct ConversationSummary {
  std::string session_id;
  std::string persona_id;
  std::vector<SummaryTurn> turns;
  std::vector<std::string> sources;  // union of citations, id ascending
};

ConversationSummary summarize_session(const Session& session);

}  // namespace vocp
