#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normtower {

enum class ErrorKind {
  MalformedSpec,
  OrderCapExceeded,
  EnumerationCapExceeded,
  GammaCapExceeded,
  SubgroupMismatch,
  GroupMismatch,
  MarkMismatch,
  IsoMismatch,
  NotCoveringMaximum,
  NotAnInterval,
  IntervalViolation,
  BadIndices,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that front ends can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool is_cap_violation() const noexcept {
    return kind_ == ErrorKind::OrderCapExceeded ||
           kind_ == ErrorKind::EnumerationCapExceeded ||
           kind_ == ErrorKind::GammaCapExceeded;
  }

 private:
  ErrorKind kind_;
};

}  // namespace normtower
