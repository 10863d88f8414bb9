#pragma once

#include <functional>
#include <optional>

#include "pdm/numerics/integrator.hpp"
#include "pdm/profiles/mass_profile.hpp"

namespace pdm::dynamics2d {

using numerics::IntegratorConfig;
using numerics::Trajectory;
using profiles::MassProfile;

/// Plane-polar phase-space point (r > 0).
struct State2D {
  double r;
  double theta;
  double rdot;
  double thetadot;
};

/// Canonical angular momentum K = g(r) r^2 thetadot, conserved when the
/// mass depends on r only.
struct AngularMomentum {
  double value;
};

/// Analytic radial fate of the motion.
struct RadialBound {
  enum class Kind { MaxRadius, Interval, Unbounded, Spiral };
  Kind kind;
  double r_max = 0.0;               ///< MaxRadius
  double r_lo = 0.0, r_hi = 0.0;    ///< Interval
  double spiral_rate = 0.0;         ///< Spiral: d(ln r)/d(theta) = m0 r0 rdot0 / K
};

/// Time derivatives of (r, theta, rdot, thetadot) for a radial mass g(r).
struct PolarDerivatives {
  double rdot;
  double thetadot;
  double rddot;
  double thetaddot;
};

/// Radial equation of motion
///   rddot = -(1/2)(g'/g) rdot^2 + (1 + (g'/2g) r) r thetadot^2
/// with thetaddot obtained by differentiating the conserved K.
PolarDerivatives polar_rhs(const MassProfile& g, const State2D& s);

/// Full equations of motion for a separable mass m(r,theta) = g(r) f(theta);
/// f is a profile over theta (its second derivative is unused). With a
/// constant f this reduces to polar_rhs.
PolarDerivatives polar_rhs_full(const MassProfile& g, const MassProfile& f,
                                const State2D& s);

AngularMomentum angular_momentum(const MassProfile& g, const State2D& s);

struct SimulateOptions {
  IntegratorConfig integrator{};
  /// When true (default) thetadot is reconstructed from the conserved K at
  /// every evaluation, which enforces the angular conservation law
  /// structurally. When false the raw second-order system is integrated.
  bool enforce_angular_momentum = true;
  /// Stop radius, as a fraction of r0 (coordinate singularity guard).
  double collapse_fraction = 1e-9;
};

/// Integrates the polar motion. Sample states are (r, theta, rdot,
/// thetadot); invariants carry [K, eq40_residual] where the residual is
/// g(r) rdot^2 - radial_speed_sq(...) * g(r), i.e. the defect of the radial
/// energy relation.
Trajectory simulate_polar(const MassProfile& g, const State2D& s0, double t_end,
                          const SimulateOptions& opt = {});

/// rdot^2 at radius r from the radial energy relation
///   g(r) rdot^2 = a2 - K^2 / (g(r) r^2),   a2 = g(r0) rdot0^2 + K^2/(g(r0) r0^2).
/// Negative values flag classically forbidden radii.
double radial_speed_sq(const MassProfile& g, double r, const State2D& init);

/// Radial fate of the power-law mass m = m0 (r/r0)^nu:
/// MaxRadius r0 (Ktilde^2/B0^2)^{1/(nu+2)} for nu < -2, Unbounded for
/// nu > -2, Spiral for nu = -2. Requires thetadot0 != 0.
RadialBound power_law_bound(double nu, double m0, double r0, double rdot0,
                            double thetadot0);

/// Exact nu = -2 trajectory r(theta) = r0 exp((m0 r0 rdot0 / K) theta).
double spiral_radius(double m0, double r0, double rdot0, double K, double theta);

/// Confinement interval of the rational 2D mass from the initial state:
/// the allowed radii satisfy C^2 r^2 - Ltilde r + 1 <= 0.
RadialBound rational_confinement_interval(double C, double m0, double r0,
                                          double rdot0, double thetadot0);

/// Same inequality from the invariants themselves (a2 = "energy", K);
/// throws NoRealRoots when the discriminant is negative, which cannot
/// happen for invariants realized by an actual state.
RadialBound rational_interval_from_invariants(double C, double c_tilde, double K,
                                              double a_sq);

}  // namespace pdm::dynamics2d
