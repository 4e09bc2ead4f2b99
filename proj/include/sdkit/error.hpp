#pragma once

#include <stdexcept>
#include <string>

namespace sdkit {

// Machine-readable failure kinds; the CLI maps these to exit codes
// (2 = invalid input, 3 = budget/truncation).
enum class ErrorKind {
  DimensionMismatch,
  OutOfTruncation,
  InvalidSSet,
  InvalidCategory,
  NotDiscFib,
  NotRightFibration,
  BudgetExceeded,
  RouteDisagreement,
  NonCommuting,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutOfTruncation: return "OutOfTruncation";
    case ErrorKind::InvalidSSet: return "InvalidSSet";
    case ErrorKind::InvalidCategory: return "InvalidCategory";
    case ErrorKind::NotDiscFib: return "NotDiscFib";
    case ErrorKind::NotRightFibration: return "NotRightFibration";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RouteDisagreement: return "RouteDisagreement";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace sdkit
