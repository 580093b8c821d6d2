#include "discordq/error.hpp"

namespace discordq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPhysical: return "NonPhysical";
    case ErrorCode::DegenerateInvariants: return "DegenerateInvariants";
    case ErrorCode::SingularCovariance: return "SingularCovariance";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::ComplexResidue: return "ComplexResidue";
    case ErrorCode::TruncationError: return "TruncationError";
    case ErrorCode::NonConverged: return "NonConverged";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace discordq
