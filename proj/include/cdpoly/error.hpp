#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdpoly {

enum class ErrorCode {
  ZeroGamma,
  DegenerateMu,
  BadLength,
  ParamsMismatch,
  NotInvertible,
  NotLocallyComplex,
  NonCentralResult,
  NoConvergence,
  NotDivisionAlgebra,
  DegreeZero,
  NonMonicHighLevel,
  NonRealCoefficients,
  InvalidArgument,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that front ends can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cdpoly
