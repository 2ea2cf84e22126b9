#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relspin {

enum class ErrorCode {
  InvalidArgument,
  NonHermitianInput,
  DimensionMismatch,
  SingularMatrix,
  GammaInconsistent,
  DegenerateObservable,
  EmptyGrid,
  NullContext,
  SpectrumMismatch,
  EigenstateResidual,
  PrecessionMismatch,
  IdentityMismatch,
  ZeroHelicity,
  ParseError,
  SuperluminalSample,
  EmptyDistribution,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `name()` is the stable identifier
/// printed by the CLI on standard error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace relspin
