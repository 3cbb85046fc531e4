#include "core/persona.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "core/error.hpp"
#include "core/text.hpp"

namespace vocp {

std::string coverage_label(const std::vector<std::string>& summary_terms,
                           const std::set<std::string>& artifact_words) {
  for (const auto& term : summary_terms) {
    if (artifact_words.contains(term)) return term;
  }
  return kGeneralTopic;
}

std::map<std::string, std::size_t> compute_coverage(const std::vector<std::string>& summary_terms,
                                                    const std::vector<std::string>& member_ids,
                                                    const Corpus& corpus) {
  std::map<std::string, std::size_t> coverage;
  for (const auto& term : summary_terms) coverage[term] = 0;
  for (const auto& id : member_ids) {
    const auto words = content_word_set(corpus.at(id).retrievable_text());
    ++coverage[coverage_label(summary_terms, words)];
  }
  return coverage;
}

std::vector<std::string> coverage_gaps(const std::map<std::string, std::size_t>& coverage,
                                       std::size_t min_evidence) {
  std::vector<std::string> gaps;
  for (const auto& [label, count] : coverage) {
    if (count < min_evidence) gaps.push_back(label);
  }
  return gaps;
}

std::vector<PersonaSegment> derive_personas(const std::vector<TopicCluster>& clusters,
                                            const Corpus& corpus, std::size_t min_cluster_size,
                                            std::size_t min_evidence) {
  std::vector<PersonaSegment> personas;
  std::map<std::string, std::size_t> name_uses;
  for (const auto& cluster : clusters) {
    if (cluster.member_ids.size() < min_cluster_size || cluster.member_ids.empty()) continue;

    PersonaSegment p;
    char ordinal[16];
    std::snprintf(ordinal, sizeof ordinal, "p%02zu", personas.size() + 1);
    p.persona_id = corpus.corpus_id() + "-" + ordinal;
    p.cluster_ids = {cluster.cluster_id};
    p.summary_terms = cluster.label_terms;

    const std::string base =
        cluster.label_terms.empty() ? std::string("Persona") : title_case(cluster.label_terms.front());
    const std::size_t use = ++name_uses[base];
    p.name = use == 1 ? base : base + " " + std::to_string(use);

    std::unordered_set<std::string> authors;
    for (const auto& id : cluster.member_ids) authors.insert(corpus.at(id).author_id);
    p.user_count = authors.size();
    p.message_count = cluster.member_ids.size();
    p.coverage = compute_coverage(p.summary_terms, cluster.member_ids, corpus);
    p.gaps = coverage_gaps(p.coverage, min_evidence);
    personas.push_back(std::move(p));
  }
  if (personas.empty()) {
    throw Error(ErrorCode::kNoPersonas,
                "no topic cluster reaches min_cluster_size " + std::to_string(min_cluster_size));
  }
  return personas;
}

std::size_t topic_coverage(const PersonaSegment& persona, const std::string& label) {
  const auto it = persona.coverage.find(label);
  return it == persona.coverage.end() ? 0 : it->second;
}

std::vector<std::string> persona_members(const PersonaSegment& persona,
                                         const std::vector<TopicCluster>& clusters) {
  std::vector<std::string> members;
  for (const auto& cid : persona.cluster_ids) {
    const auto it = std::find_if(clusters.begin(), clusters.end(),
                                 [&cid](const TopicCluster& c) { return c.cluster_id == cid; });
    if (it == clusters.end()) {
      throw Error(ErrorCode::kCorpusMismatch, "persona references unknown cluster '" + cid + "'");
    }
    members.insert(members.end(), it->member_ids.begin(), it->member_ids.end());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

}  // namespace vocp
