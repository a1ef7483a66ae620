#pragma once

#include <stdexcept>

namespace psq {

// Exit-code contract for the CLI: precondition violations map to exit
// code 2, budget/precision exhaustion to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct DomainError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct RangeViolation : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct HypothesisViolated : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NoFeasiblePair : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct DegenerateExponents : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct DegenerateFit : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct BudgetError : Error {
  using Error::Error;
};

struct BudgetExceeded : BudgetError {
  using BudgetError::BudgetError;
};

struct LimitTooLarge : BudgetError {
  using BudgetError::BudgetError;
};

struct PrecisionExhausted : BudgetError {
  using BudgetError::BudgetError;
};

}  // namespace psq
