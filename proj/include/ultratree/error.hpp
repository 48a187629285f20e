#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultratree {

// Stable codes; the CLI prints them verbatim, so never renumber or rename.
enum class ErrorCode {
  Empty,
  NotConnected,
  HasCycle,
  BadEdge,
  UnknownVertex,
  SamePoint,
  CapExceeded,
  DegenerateLabeling,
  DegenerateResult,
  NoLongPath,
  BudgetExceeded,
  SymmetryViolation,
  PositivityViolation,
  StrongTriangleViolation,
  UnknownPoint,
  EmptySubset,
  NotUS,
  ParseError,
  UsageError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ultratree
