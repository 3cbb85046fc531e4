#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vocp {

struct Claim {
  std::string text;
  std::vector<std::string> citations;
  double support_score = 0.0;
  bool operator==(const Claim&) const = default;
};

enum class ResponseKind { kAnswered, kAbstained };

inline std::string_view response_kind_name(ResponseKind kind) {
  return kind == ResponseKind::kAnswered ? "answered" : "abstained";
}

struct PersonaResponse {
  ResponseKind kind = ResponseKind::kAbstained;
  std::vector<Claim> claims;
  std::optional<std::string> abstain_note;
  std::string bundle_ref;
  bool operator==(const PersonaResponse&) const = default;
};

}  // namespace vocp
