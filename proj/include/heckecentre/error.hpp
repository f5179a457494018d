#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hc {

enum class Errc {
  NotExact,
  MissingAssignment,
  ZeroAtNegativeExponent,
  ShapeMismatch,
  OutOfRange,
  NotInvariant,
  NegativeExponentInput,
  NotAPower,
  ZeroConstantTerm,
  ZeroRoot,
  IrrationalRoots,
  DegenerateParameter,
  ParameterMismatch,
  SizeMismatch,
  LimitExceeded,
  ParseError,
  InvalidInput,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hc
