#pragma once

#include <nlohmann/json.hpp>

#include "core/conversation.hpp"
#include "core/corpus.hpp"
#include "core/evidence.hpp"
#include "core/grounding.hpp"
#include "core/persona.hpp"
#include "core/provenance.hpp"
#include "core/reaction.hpp"
#include "core/topics.hpp"

// JSON wire and file forms. Field names follow the domain type fields.
// The *_from_json readers throw FieldError on malformed input.
namespace vocp {

using nlohmann::json;

json to_json(const std::vector<ScoredId>& scored);
std::vector<ScoredId> scored_from_json(const json& j);

json to_json(const TopicCluster& cluster);
TopicCluster cluster_from_json(const json& j);

json to_json(const PersonaSegment& persona);
PersonaSegment persona_from_json(const json& j);

json to_json(const EvidenceBundle& bundle);

json to_json(const PersonaResponse& response);
PersonaResponse response_from_json(const json& j);

json to_json(const VerificationReport& report);
VerificationReport verification_from_json(const json& j);

json to_json(const ReactionStimulus& stimulus);
ReactionStimulus stimulus_from_json(const json& j);

json to_json(const ReactionReport& report);
ReactionReport reaction_from_json(const json& j);

/// One transcript JSONL record.
json to_json(const TurnRecord& record);
TurnRecord turn_from_json(const json& j);

json to_json(const ConversationSummary& summary);

json to_json(const ProvenanceCard& card);
ProvenanceCard card_from_json(const json& j);

json to_json(const CorpusStats& stats);

}  // namespace vocp
