#pragma once

#include <stdexcept>
#include <string>

namespace seghull {

enum class Errc {
  EmptyInput,
  NonFiniteInput,
  DegenerateInput,
  InputTooLarge,
  InternalError,
  FileNotFound,
  ParseError,
  UnsupportedFormat,
  IoError,
  VerificationFailed,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::EmptyInput: return "empty input";
    case Errc::NonFiniteInput: return "non-finite input";
    case Errc::DegenerateInput: return "degenerate input";
    case Errc::InputTooLarge: return "input too large";
    case Errc::InternalError: return "internal error";
    case Errc::FileNotFound: return "file not found";
    case Errc::ParseError: return "parse error";
    case Errc::UnsupportedFormat: return "unsupported format";
    case Errc::IoError: return "i/o error";
    case Errc::VerificationFailed: return "verification failed";
  }
  return "unknown error";
}

// Single exception type for all library errors; code() drives the CLI's
// exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace seghull
