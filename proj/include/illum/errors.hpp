// Error taxonomy; the CLI maps these onto its exit-code contract.
#pragma once

#include <stdexcept>

namespace illum {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (files, JSON, matrix text).
struct ParseError : Error {
  using Error::Error;
};

/// Basis columns are (numerically) linearly dependent.
struct NearSingularError : Error {
  using Error::Error;
};

/// Requested operation exceeds an enumeration/permutation dimension cap.
struct DimensionTooLargeError : Error {
  using Error::Error;
};

/// Body circumball does not fit strictly inside the simplex.
struct DoesNotFitError : Error {
  using Error::Error;
};

/// Integer matrix row violates the coprime-entries requirement.
struct CoprimalityError : Error {
  using Error::Error;
};

}  // namespace illum
