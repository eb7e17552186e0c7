#include "radvar/errors.hpp"

namespace radvar {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonConvexData: return "NonConvexData";
    case ErrorCode::BadDomain: return "BadDomain";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::OutsideDualDomain: return "OutsideDualDomain";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DegenerateG: return "DegenerateG";
    case ErrorCode::RatioUnreachable: return "RatioUnreachable";
    case ErrorCode::NotSuperlinear: return "NotSuperlinear";
    case ErrorCode::NotInPhiA: return "NotInPhiA";
    case ErrorCode::InconsistentParams: return "InconsistentParams";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::DualDomainExceeded: return "DualDomainExceeded";
    case ErrorCode::NotConvexH: return "NotConvexH";
    case ErrorCode::IncompatibleProblem: return "IncompatibleProblem";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::PrereqFailed: return "PrereqFailed";
    case ErrorCode::G0Violated: return "G0Violated";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

int Error::exit_code() const {
  switch (code_) {
    case ErrorCode::HypothesisViolation:
    case ErrorCode::IncompatibleProblem:
    case ErrorCode::DegenerateG:
    case ErrorCode::G0Violated:
      return 2;
    default:
      return 1;
  }
}

}  // namespace radvar
