#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcdpat {

enum class ErrorCode {
  Parse,
  DegreeTooSmall,
  NotCoprime,
  FactorizationIncomplete,
  NotPrime,
  ZeroModP,
  NotMonic,
  NotSimpleRoot,
  NotARoot,
  NotSplitSimple,
  BothZero,
  PrereqViolated,
  PreconditionViolated,
  WrongValuation,
  ModulusMismatch,
  WindowTooShort,
  ScanCapExceeded,
  InvalidArgument,
  Internal,
};

// Stable snake_case identifier, used by the CLI and the JSON report.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Parse,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gcdpat
