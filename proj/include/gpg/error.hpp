#pragma once

#include <stdexcept>
#include <string>

namespace gpg {

enum class ErrorKind {
  NotClosed,
  NoIdentity,
  NoInverse,
  NotAssociative,
  IndexOutOfRange,
  SameElement,
  NotPrime,
  OrderCapExceeded,
  NotAPermutation,
  BadParameters,
  Parse,
  TooLarge,
  ConventionUnsupported,
  Io,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; `kind()` lets callers and tests
// branch on the failure class, `what()` names the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpg
