#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace enriques {

enum class ErrorKind {
  DimensionMismatch,
  NotDivisible,
  ZeroClass,
  NegativeSquare,
  ParityViolation,
  NotGloballyPresentable,
  EvenRank,
  BudgetExceeded,
  NotFound,
  InvalidArgument,
  InvariantViolation,
  Overflow,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::NotDivisible: return "not divisible";
    case ErrorKind::ZeroClass: return "zero class";
    case ErrorKind::NegativeSquare: return "negative square";
    case ErrorKind::ParityViolation: return "parity violation";
    case ErrorKind::NotGloballyPresentable: return "not globally presentable";
    case ErrorKind::EvenRank: return "even rank";
    case ErrorKind::BudgetExceeded: return "k budget exceeded";
    case ErrorKind::NotFound: return "not found within bound";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::InvariantViolation: return "invariant violation";
    case ErrorKind::Overflow: return "integer overflow";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown";
}

/// Every failure in the library is reported through this exception. The
/// message always begins with the kind's canonical name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(compose(kind, detail)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  static std::string compose(ErrorKind kind, const std::string& detail) {
    std::string msg{to_string(kind)};
    if (!detail.empty()) {
      msg += ": ";
      msg += detail;
    }
    return msg;
  }

  ErrorKind kind_;
};

}  // namespace enriques
