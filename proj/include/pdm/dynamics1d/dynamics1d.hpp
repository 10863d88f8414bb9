#pragma once

#include <optional>

#include "pdm/numerics/integrator.hpp"
#include "pdm/profiles/mass_profile.hpp"

namespace pdm::dynamics1d {

using numerics::IntegratorConfig;
using numerics::Trajectory;
using profiles::MassProfile;

/// Phase-space point of the 1D particle.
struct State1D {
  double x;
  double xdot;
};

/// The conserved quasi-linear momentum sqrt(m(x)) * xdot.
struct QuasiMomentum {
  double value;
};

/// Long-time fate of the classical motion.
struct ConfinementClass1D {
  enum class Kind {
    ConfinedFinite,             ///< stays within a finite range
    UnboundedFiniteTimeBlowup,  ///< reaches infinity at a finite time
    UnboundedAsymptotic,        ///< escapes steadily as t -> infinity
  };
  Kind kind;
  double range_lo = 0.0;   ///< visited range (ConfinedFinite)
  double range_hi = 0.0;
  double t_blowup = 0.0;   ///< blow-up time estimate (UnboundedFiniteTimeBlowup)
};

/// xddot = -(1/2) (m'/m) xdot^2 — the only force a quasi-free PDM particle
/// feels is the byproduct of its own mass variation.
double acceleration(const MassProfile& profile, const State1D& s);

/// Pi = sqrt(m(x)) xdot, conserved along exact trajectories.
QuasiMomentum quasi_momentum(const MassProfile& profile, const State1D& s);

/// Integrates the equation of motion from s0 to t_end. Sample states are
/// (x, xdot); invariants carry [Pi]. Terminates early with a Diverged
/// marker on finite-time blow-up. Requires xdot0 != 0.
Trajectory simulate(const MassProfile& profile, const State1D& s0, double t_end,
                    const IntegratorConfig& config = {});

/// Exact trajectory of the rational-mass model m = m0/(1+B^2 x^2)^2:
/// x(t) = (1/B) tan(B xdot0 t / (1 + B^2 x0^2) + arctan(B x0)).
/// Throws BlowupReached when the tan argument leaves (-pi/2, pi/2).
double closed_form_rational(double B, const State1D& s0, double t);

/// Finite blow-up time of the same model (time at which x -> +/- infinity).
double rational_blowup_time(double B, const State1D& s0);

/// Exact trajectory of the exponential-mass model with n = 0
/// (m = m0 e^{2Ax}): x(t) = (1/A) ln(A xdot0 t + e^{A x0}).
/// Throws DomainError once the log argument reaches zero.
double closed_form_exponential_n0(double A, const State1D& s0, double t);

/// PCT coordinate q(x) = Int_{x_ref}^{x} sqrt(m(u)) du. Analytic for the
/// rational, power-law and constant families; adaptive quadrature otherwise.
double pct_coordinate(const MassProfile& profile, double x, double x_ref = 0.0);

struct ClassifyOptions {
  double horizon = 100.0;      ///< simulated time budget
  double x_ceiling = 1e6;      ///< |x| treated as "escaped"
  /// Escape requires the conserved-momentum speed at the ceiling to stay
  /// above this fraction of |xdot0|; slower motion is a confined creep.
  double speed_floor_rel = 1e-6;
  IntegratorConfig integrator{};
};

/// Classifies the long-time fate of the motion. Blow-up is detected by
/// simulation (with the blow-up time refined by pole extrapolation); the
/// escaping/creeping distinction uses the conservation law
/// xdot(x) = xdot0 sqrt(m(x0)/m(x)) evaluated at the ceiling, so the verdict
/// does not depend on reaching the ceiling within the horizon.
ConfinementClass1D classify(const MassProfile& profile, const State1D& s0,
                            const ClassifyOptions& opt = {});

}  // namespace pdm::dynamics1d
