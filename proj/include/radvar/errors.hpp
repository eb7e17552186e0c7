#ifndef RADVAR_ERRORS_HPP
#define RADVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace radvar {

enum class ErrorCode {
  NonConvexData,
  BadDomain,
  OutsideDomain,
  OutsideDualDomain,
  TooFewSamples,
  DegenerateG,
  RatioUnreachable,
  NotSuperlinear,
  NotInPhiA,
  InconsistentParams,
  SchemaError,
  HypothesisViolation,
  GridMismatch,
  DualDomainExceeded,
  NotConvexH,
  IncompatibleProblem,
  Infeasible,
  NonFinite,
  PrereqFailed,
  G0Violated,
  DimensionMismatch,
  UnknownExample,
  UsageError,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

  /// Process exit code for the CLI contract: 2 for hypothesis violations,
  /// 3 for solver non-convergence, 1 for everything else.
  int exit_code() const;

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace radvar

#endif  // RADVAR_ERRORS_HPP
