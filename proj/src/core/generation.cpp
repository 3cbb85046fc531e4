#include "core/generation.hpp"

#include <algorithm>

#include "core/embedding.hpp"
#include "core/error.hpp"
#include "core/text.hpp"

namespace vocp {

DraftResponse generate_extractive(const GenerationRequest& request) {
  struct Candidate {
    double score;
    const std::string* artifact_id;
    std::size_t position;
    std::string sentence;
  };

  const EmbeddingVector question = embed_text(request.question);
  std::vector<Candidate> candidates;
  for (const auto& item : request.evidence.items) {
    const auto sentences = split_sentences(item.artifact.retrievable_text());
    for (std::size_t pos = 0; pos < sentences.size(); ++pos) {
      candidates.push_back(
          {cosine_similarity(embed_text(sentences[pos]), question), &item.artifact.id, pos, sentences[pos]});
    }
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoUsableSentence, "evidence contains no usable sentence");
  }

  const std::size_t take = std::min(kMaxExtractiveSentences, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take),
                    candidates.end(), [](const Candidate& a, const Candidate& b) {
                      if (a.score != b.score) return a.score > b.score;
                      if (*a.artifact_id != *b.artifact_id) return *a.artifact_id < *b.artifact_id;
                      return a.position < b.position;
                    });

  DraftResponse draft;
  for (std::size_t i = 0; i < take; ++i) {
    draft.sentences.push_back(
        {std::string(kFirstPersonPrefix) + candidates[i].sentence, *candidates[i].artifact_id});
  }
  return draft;
}

}  // namespace vocp
