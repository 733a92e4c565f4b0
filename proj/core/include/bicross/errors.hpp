#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace bicross {

// Every failure mode the engine can report. Codes are stable: the CLI maps
// them to exit status 1 and serializes the name in JSON error objects.
enum class ErrorCode {
  InvalidParameter,
  IndexOutOfRange,
  // Cayley table validation
  NotUnital,
  NonBijectiveRow,
  NonBijectiveColumn,
  NonAssociative,
  NoInverse,
  // subgroups
  NotASubgroup,
  NotNormal,
  // action / matched pair validation
  ShapeMismatch,
  NotAnAction,
  Compat1Violation,
  Compat2Violation,
  // bicrossed construction
  InvalidMatchedPair,
  NotAutomorphismAction,
  NotAMorphism,
  NotHomomorphism,
  IncompatiblePair,
  InternalConsistency,
  // factorization
  NotExactFactorization,
  // cyclic enumeration
  BudgetExceeded,
  NotPrime,
  TheoremViolation,
  PreconditionFailure,
  FrobeniusStepFailure,
  // I/O
  ParseError,
};

const char* error_code_name(ErrorCode code);

// Witness slots are element indices; unused slots hold -1.
using Witness = std::array<int, 3>;
inline constexpr Witness kNoWitness{-1, -1, -1};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, Witness witness = kNoWitness)
      : std::runtime_error(message), code_(code), witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  Witness witness_;
};

}  // namespace bicross
