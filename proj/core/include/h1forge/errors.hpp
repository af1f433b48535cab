#pragma once

#include <stdexcept>
#include <string>

namespace h1f {

// Error hierarchy. The three bases map onto CLI exit codes:
// BadInput -> 2, CapError -> 3, InvariantError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadInput : Error {
  using Error::Error;
};

struct CapError : Error {
  using Error::Error;
};

// An internal contract was violated (solver disagreement, failed certificate
// re-verification). Always a bug, never a user error.
struct InvariantError : Error {
  using Error::Error;
};

struct NonPrime : BadInput {
  explicit NonPrime(unsigned long long p)
      : BadInput("not a prime: " + std::to_string(p)) {}
};

struct Overflow : BadInput {
  using BadInput::BadInput;
};

struct ParseError : BadInput {
  using BadInput::BadInput;
};

struct MismatchedField : BadInput {
  MismatchedField() : BadInput("operands live over different field contexts") {}
};

struct DimensionMismatch : BadInput {
  using BadInput::BadInput;
};

struct SingularGenerator : BadInput {
  SingularGenerator() : BadInput("generator matrix is singular") {}
};

struct UnsupportedParams : BadInput {
  using BadInput::BadInput;
};

struct NotSubgroup : BadInput {
  using BadInput::BadInput;
  NotSubgroup() : BadInput("not a subgroup of the ambient group") {}
};

struct NotNormal : BadInput {
  using BadInput::BadInput;
  NotNormal() : BadInput("subgroup is not normal") {}
};

struct NotAHomomorphism : BadInput {
  using BadInput::BadInput;
  NotAHomomorphism()
      : BadInput("generator action does not extend to a homomorphism over the "
                 "multiplication table") {}
};

struct BadTwist : BadInput {
  using BadInput::BadInput;
};

struct ZeroVector : BadInput {
  ZeroVector() : BadInput("cannot spin the zero vector") {}
};

struct HypothesesNotVerified : BadInput {
  using BadInput::BadInput;
};

struct SplitFailed : BadInput {
  using BadInput::BadInput;
};

struct SameCharacteristic : BadInput {
  using BadInput::BadInput;
};

struct UnknownFamily : BadInput {
  using BadInput::BadInput;
};

struct CapExceeded : CapError {
  using CapError::CapError;
};

struct Inconclusive : CapError {
  using CapError::CapError;
};

}  // namespace h1f
