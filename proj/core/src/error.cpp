#include "projlink/error.hpp"

namespace projlink {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::MalformedPairing: return "MalformedPairing";
    case ErrorCode::MalformedRotation: return "MalformedRotation";
    case ErrorCode::NotEulerian: return "NotEulerian";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAWitness: return "NotAWitness";
    case ErrorCode::NotAntipodallySelfDual: return "NotAntipodallySelfDual";
    case ErrorCode::NotProjective: return "NotProjective";
    case ErrorCode::PoleInput: return "PoleInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

}  // namespace projlink
