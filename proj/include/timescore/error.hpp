#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace timescore {

enum class ErrorCode {
  MalformedRow,
  DuplicateFixture,
  NonmonotonicGoals,
  UnknownFormat,
  NoncontiguousRounds,
  EmptySeason,
  TooFewTeams,
  WrongSystem,
  InvalidWeights,
  InvalidArgument,
};

constexpr std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedRow: return "MALFORMED_ROW";
    case ErrorCode::DuplicateFixture: return "DUPLICATE_FIXTURE";
    case ErrorCode::NonmonotonicGoals: return "NONMONOTONIC_GOALS";
    case ErrorCode::UnknownFormat: return "UNKNOWN_FORMAT";
    case ErrorCode::NoncontiguousRounds: return "NONCONTIGUOUS_ROUNDS";
    case ErrorCode::EmptySeason: return "EMPTY_SEASON";
    case ErrorCode::TooFewTeams: return "TOO_FEW_TEAMS";
    case ErrorCode::WrongSystem: return "WRONG_SYSTEM";
    case ErrorCode::InvalidWeights: return "INVALID_WEIGHTS";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// Data or validation failure. `line()` is the 1-based input line (CSV) or
/// match index (JSON) when the failure is tied to one record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(code, detail, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& detail,
                            std::optional<std::size_t> line) {
    std::string msg(error_code_name(code));
    if (line) msg += " (line " + std::to_string(*line) + ")";
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace timescore
