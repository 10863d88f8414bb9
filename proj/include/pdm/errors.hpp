#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad parameter, forbidden state).
struct PreconditionError : Error {
  using Error::Error;
};

/// Evaluation requested outside a function's valid domain (mass would be
/// non-positive, singular point, log of a non-positive argument, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Adaptive step size underflowed; the problem is too stiff or singular
/// at the current state.
struct StepFailure : Error {
  using Error::Error;
};

/// A vector field returned NaN or Inf.
struct NonFiniteState : Error {
  using Error::Error;
};

/// Iterative eigenvalue solver exceeded its iteration cap.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// A closed-form trajectory was evaluated at or beyond its finite-time
/// singularity.
struct BlowupReached : Error {
  using Error::Error;
};

/// Confinement inequality has no real roots for the supplied invariants.
struct NoRealRoots : Error {
  using Error::Error;
};

/// A spectrum was requested for a potential that does not admit bound states.
struct NotBound : Error {
  using Error::Error;
};

/// Radial coordinate collapsed to the origin (coordinate singularity).
struct CollapseToCenter : Error {
  using Error::Error;
};

}  // namespace pdm
