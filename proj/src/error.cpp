#include "altcert/error.hpp"

namespace altcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::HasFixedPoint: return "HasFixedPoint";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::GenusNegative: return "GenusNegative";
    case ErrorCode::NotFourValent: return "NotFourValent";
    case ErrorCode::BadOverFlags: return "BadOverFlags";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NotTwoPunctured: return "NotTwoPunctured";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidCage: return "InvalidCage";
    case ErrorCode::TooFewEndpoints: return "TooFewEndpoints";
    case ErrorCode::EndpointParityViolation: return "EndpointParityViolation";
    case ErrorCode::ParityUnsolvable: return "ParityUnsolvable";
    case ErrorCode::InvalidTangle: return "InvalidTangle";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace altcert
