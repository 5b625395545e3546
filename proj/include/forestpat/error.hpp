#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forestpat {

enum class ErrorKind {
  InvalidSequence,
  InvalidDecomposition,
  InvalidPartition,
  CycleDetected,
  ParentOutOfRange,
  NotAncestorClosed,
  NotIncreasing,
  NotUnimodal,
  NotInClass,
  TwoAfterOne,
  BudgetExceeded,
  InternalNonInteger,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and tests)
/// can dispatch on it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace forestpat
