#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace vocp {

using Timestamp = std::chrono::sys_time<std::chrono::microseconds>;

/// Parses an RFC 3339 date-time ("2024-01-01T12:00:00Z",
/// "2024-01-01T12:00:00.25+02:00"). Returns nullopt on any malformed input.
std::optional<Timestamp> parse_rfc3339(std::string_view text);

/// Canonical UTC rendering; fractional seconds only when non-zero.
std::string format_rfc3339(Timestamp ts);

/// "YYYY-MM" bucket of a timestamp in UTC.
std::string month_key(Timestamp ts);

}  // namespace vocp
