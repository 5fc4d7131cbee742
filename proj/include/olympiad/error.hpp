#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace olympiad {

enum class ErrorCode {
  InvalidSide,
  OutOfBounds,
  CellsNotEmpty,
  LineNotFull,
  NotDivisibleBy3,
  DivisibleBy3,
  CoincidentAbscissae,
  NonCancellingLeads,
  ZeroLeading,
  IsolatedVertex,
  InvalidGraph,
  EnumerationGuard,
  Parse,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSide: return "InvalidSide";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::CellsNotEmpty: return "CellsNotEmpty";
    case ErrorCode::LineNotFull: return "LineNotFull";
    case ErrorCode::NotDivisibleBy3: return "NotDivisibleBy3";
    case ErrorCode::DivisibleBy3: return "DivisibleBy3";
    case ErrorCode::CoincidentAbscissae: return "CoincidentAbscissae";
    case ErrorCode::NonCancellingLeads: return "NonCancellingLeads";
    case ErrorCode::ZeroLeading: return "ZeroLeading";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::EnumerationGuard: return "EnumerationGuard";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

// Every domain failure in the library is an Error; code() says which.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by replay(); carries the position of the first move that failed.
class ReplayError : public Error {
 public:
  ReplayError(const Error& cause, std::size_t index)
      : Error(cause.code(), "move " + std::to_string(index) + ": " + cause.what()), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// 3 | n: no impossibility certificate exists; pair() is the degenerate (a,b).
class DivisibleBy3Error : public Error {
 public:
  DivisibleBy3Error(int n, std::pair<int, int> pair)
      : Error(ErrorCode::DivisibleBy3,
              "n=" + std::to_string(n) + " has degenerate pair (" + std::to_string(pair.first) + "," +
                  std::to_string(pair.second) + ")"),
        pair_(pair) {}

  std::pair<int, int> pair() const noexcept { return pair_; }

 private:
  std::pair<int, int> pair_;
};

}  // namespace olympiad
