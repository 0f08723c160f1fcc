#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopreps {

enum class ErrorCode {
  ZeroDivisor,
  Singular,
  NotARoot,
  NotClosed,
  WrongOrder,
  FixedFieldTooBig,
  BadSubgroup,
  UnknownType,
  NotDominant,
  NotSameClass,
  SearchExhausted,
  ContextMismatch,
  UnsupportedType,
  DescentInconsistency,
  PrimitiveSearchFailed,
  CertificateFailed,
  BadConstantTerm,
  ZeroPoint,
  Overflow,
  InvalidArgument,
  ParseError,
};

std::string_view errorName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// CLI reports errorName(code()) verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(errorName(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errorName(code_); }

 private:
  ErrorCode code_;
};

}  // namespace loopreps
