#pragma once

#include <stdexcept>
#include <string>

namespace carpets {

// Validation failures on input data (maps outside (0,1) ratios, images
// escaping the unit square, malformed JSON, ...). CLI exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidMap : ValidationError {
  using ValidationError::ValidationError;
};

// An operation was called on a carpet of the wrong classification.
struct WrongKind : ValidationError {
  using ValidationError::ValidationError;
};

struct DomainError : ValidationError {
  using ValidationError::ValidationError;
};

struct OutOfRange : ValidationError {
  using ValidationError::ValidationError;
};

// Nothing to tune: e.g. a target-dimension request on a carpet whose lower
// and Assouad dimensions coincide.
struct Degenerate : ValidationError {
  using ValidationError::ValidationError;
};

struct NoSolution : ValidationError {
  using ValidationError::ValidationError;
};

struct EmptyCloud : ValidationError {
  using ValidationError::ValidationError;
};

// Sequence specs the algorithms cannot certify (e.g. Barański Ω₀ words).
struct UnsupportedSpec : ValidationError {
  using ValidationError::ValidationError;
};

// Enumeration budgets. CLI exit code 3.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooLarge : BudgetExceeded {
  using BudgetExceeded::BudgetExceeded;
};

// An optimizer's restarts disagreed beyond tolerance.
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace carpets
