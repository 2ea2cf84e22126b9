#include "relspin/errors.hpp"

namespace relspin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::GammaInconsistent: return "GammaInconsistent";
    case ErrorCode::DegenerateObservable: return "DegenerateObservable";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::NullContext: return "NullContext";
    case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorCode::EigenstateResidual: return "EigenstateResidual";
    case ErrorCode::PrecessionMismatch: return "PrecessionMismatch";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::ZeroHelicity: return "ZeroHelicity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SuperluminalSample: return "SuperluminalSample";
    case ErrorCode::EmptyDistribution: return "EmptyDistribution";
  }
  return "Unknown";
}

}  // namespace relspin
