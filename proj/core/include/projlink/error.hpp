#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace projlink {

enum class ErrorCode {
  NotConnected,
  NotSpherical,
  MalformedPairing,
  MalformedRotation,
  NotEulerian,
  TooLarge,
  NotAWitness,
  NotAntipodallySelfDual,
  NotProjective,
  PoleInput,
  ParseError,
  InternalContradiction,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every projlink operation. The code is stable and is
/// what the command-line tool reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace projlink
