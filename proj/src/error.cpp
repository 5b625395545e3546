#include "forestpat/error.hpp"

namespace forestpat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::ParentOutOfRange: return "ParentOutOfRange";
    case ErrorKind::NotAncestorClosed: return "NotAncestorClosed";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::NotUnimodal: return "NotUnimodal";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::TwoAfterOne: return "TwoAfterOne";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalNonInteger: return "InternalNonInteger";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace forestpat
