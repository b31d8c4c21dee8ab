#pragma once

#include <stdexcept>
#include <string>

namespace plectic {

/// Error categories surfaced through the C API as status codes.
enum class ErrorKind {
  Parse,        // malformed expression / JSON / manifest
  Domain,       // evaluation outside the chart domain (zero denominator, excluded locus)
  Invalid,      // structurally invalid input (wrong degree, unknown fixture, bad cover, ...)
  Singular,     // linear algebra failed where the contract requires success
  Unsupported,  // input outside the supported closed-form family
  Verify,       // a verification contract was violated
};

class PlecticError : public std::runtime_error {
public:
  PlecticError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw PlecticError(kind, msg);
}

} // namespace plectic
