#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pdm/errors.hpp"

namespace pdm::numerics {

/// Explicit ODE integration with local error control.
///
/// The default method is the embedded Dormand-Prince 5(4) pair; a plain
/// fixed-step classical RK4 is selectable for order studies and as a
/// fallback. Solutions that grow past `divergence_ceiling` terminate
/// cleanly with a Diverged marker — finite-time blow-up is a legitimate
/// outcome for quasi-free PDM motion, not an error.
struct IntegratorConfig {
  enum class Method { DormandPrince54, FixedRk4 };

  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  /// Upper bound on the step size; for FixedRk4 this *is* the step and
  /// must be positive. Zero means "no bound" for the adaptive method.
  double max_step = 0.0;
  std::size_t max_steps = 2'000'000;
  /// |state component| at which integration stops with Diverged.
  double divergence_ceiling = 1e12;
  Method method = Method::DormandPrince54;
};

/// Why integration stopped.
enum class StopReason {
  ReachedEnd,   ///< covered the requested time span
  Diverged,     ///< a state component crossed the divergence ceiling
  EventStop,    ///< the user stop condition fired
};

struct TrajectorySample {
  double t;
  std::vector<double> state;
  std::vector<double> invariants;  ///< caller-defined conserved quantities
};

/// Time-ordered solution samples at the accepted integration steps.
struct Trajectory {
  std::vector<TrajectorySample> samples;
  StopReason stop = StopReason::ReachedEnd;

  [[nodiscard]] const TrajectorySample& front() const { return samples.front(); }
  [[nodiscard]] const TrajectorySample& back() const { return samples.back(); }
  [[nodiscard]] std::size_t size() const { return samples.size(); }
  [[nodiscard]] bool diverged() const { return stop == StopReason::Diverged; }
};

/// dy/dt = rhs(t, y); writes the derivative into dydt.
using VectorField = std::function<void(double t, std::span<const double> y,
                                       std::span<double> dydt)>;
/// Optional per-sample observables stored in TrajectorySample::invariants.
using InvariantFn = std::function<std::vector<double>(double t, std::span<const double> y)>;
/// Optional termination predicate, checked after each accepted step.
using StopCondition = std::function<bool(double t, std::span<const double> y)>;

/// Integrates y' = rhs(t, y) over t_span, sampling every accepted step.
///
/// Deterministic: identical inputs produce bit-identical trajectories.
/// Throws NonFiniteState if the field returns NaN/Inf at the initial state
/// or mid-integration, StepFailure if the adaptive step underflows or the
/// step budget is exhausted.
Trajectory integrate(const VectorField& rhs, std::span<const double> y0,
                     std::pair<double, double> t_span,
                     const IntegratorConfig& config = {},
                     const InvariantFn& invariants = nullptr,
                     const StopCondition& stop_when = nullptr);

}  // namespace pdm::numerics
