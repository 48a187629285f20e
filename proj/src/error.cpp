#include "ultratree/error.hpp"

namespace ultratree {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::HasCycle: return "HasCycle";
    case ErrorCode::BadEdge: return "BadEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegenerateLabeling: return "DegenerateLabeling";
    case ErrorCode::DegenerateResult: return "DegenerateResult";
    case ErrorCode::NoLongPath: return "NoLongPath";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::PositivityViolation: return "PositivityViolation";
    case ErrorCode::StrongTriangleViolation: return "StrongTriangleViolation";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotUS: return "NotUS";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ultratree
