#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kusub {

enum class ErrorCode {
  MixedDegree,
  EmptyGenerators,
  GroupTooLarge,
  NotNormal,
  NotASubgroup,
  NotContained,
  NotMaximal,
  TrivialGroup,
  PrimeDoesNotDivide,
  BadOrdering,
  PreconditionViolated,
  SyntaxError,
  DegreeMismatch,
  NotABijection,
  NotAssociative,
  NoIdentity,
  NoInverse,
  Malformed,
  Io,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI exit-status mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kusub
