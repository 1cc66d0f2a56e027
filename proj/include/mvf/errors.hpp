#pragma once

#include <stdexcept>
#include <string>

namespace mvf {

enum class ErrorCode {
  ZeroPolynomial,
  ZeroArgument,
  NonCoprimeModuli,
  UnsupportedRamification,
  PrecisionExhausted,
  FieldMismatch,
  DegreeCapExceeded,
  ClosureMismatch,
  ClosureTooSmall,
  MaxStepsExceeded,
  InconsistentSamePlace,
  HypothesisViolated,
  PreconditionViolated,
  InvalidArgument,
  ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace mvf
