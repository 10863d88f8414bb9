#include "pdm/dynamics1d/dynamics1d.hpp"

#include <cmath>

#include "pdm/numerics/quadrature.hpp"

namespace pdm::dynamics1d {

double acceleration(const MassProfile& profile, const State1D& s) {
  return -0.5 * profile.log_derivative(s.x) * s.xdot * s.xdot;
}

QuasiMomentum quasi_momentum(const MassProfile& profile, const State1D& s) {
  return {std::sqrt(profile.mass(s.x)) * s.xdot};
}

Trajectory simulate(const MassProfile& profile, const State1D& s0, double t_end,
                    const IntegratorConfig& config) {
  if (s0.xdot == 0.0) {
    throw PreconditionError(
        "simulate: the particle needs a non-zero initial velocity to move in "
        "its own byproducted force field");
  }
  const double y0[] = {s0.x, s0.xdot};
  const auto rhs = [&profile](double, std::span<const double> y, std::span<double> dydt) {
    dydt[0] = y[1];
    dydt[1] = -0.5 * profile.log_derivative(y[0]) * y[1] * y[1];
  };
  const auto invariants = [&profile](double, std::span<const double> y) {
    return std::vector<double>{std::sqrt(profile.mass(y[0])) * y[1]};
  };
  return numerics::integrate(rhs, y0, {0.0, t_end}, config, invariants);
}

double closed_form_rational(double B, const State1D& s0, double t) {
  if (B == 0.0) throw PreconditionError("closed_form_rational: B must be non-zero");
  const double w0 = 1.0 + B * B * s0.x * s0.x;
  const double arg = B * s0.xdot * t / w0 + std::atan(B * s0.x);
  if (std::abs(arg) >= M_PI / 2.0) {
    throw BlowupReached("closed_form_rational: trajectory reached infinity before t");
  }
  return std::tan(arg) / B;
}

double rational_blowup_time(double B, const State1D& s0) {
  if (B == 0.0 || s0.xdot == 0.0)
    throw PreconditionError("rational_blowup_time: needs B != 0 and xdot0 != 0");
  const double w0 = 1.0 + B * B * s0.x * s0.x;
  const double wall = s0.xdot > 0.0 ? M_PI / 2.0 : -M_PI / 2.0;
  return (wall - std::atan(B * s0.x)) * w0 / (B * s0.xdot);
}

double closed_form_exponential_n0(double A, const State1D& s0, double t) {
  if (A == 0.0) throw PreconditionError("closed_form_exponential_n0: A must be non-zero");
  const double arg = A * s0.xdot * t + std::exp(A * s0.x);
  if (arg <= 0.0) {
    throw DomainError("closed_form_exponential_n0: past the finite-time escape");
  }
  return std::log(arg) / A;
}

double pct_coordinate(const MassProfile& profile, double x, double x_ref) {
  using profiles::MassProfile;
  if (const auto* r1 = profile.as<MassProfile::Rational1D>()) {
    const double s = std::sqrt(r1->m0) / r1->B;
    return s * (std::atan(r1->B * x) - std::atan(r1->B * x_ref));
  }
  if (const auto* r2 = profile.as<MassProfile::Rational2D>()) {
    const double s = std::sqrt(r2->c_tilde) / r2->C;
    return s * (std::atan(r2->C * x) - std::atan(r2->C * x_ref));
  }
  if (const auto* pl = profile.as<MassProfile::PowerLaw2D>()) {
    if (x <= 0.0 || x_ref <= 0.0) throw DomainError("pct_coordinate: power-law needs r > 0");
    const double half_nu = 0.5 * pl->nu;
    const double s = std::sqrt(pl->m0 * std::pow(pl->r0, -pl->nu));
    if (half_nu == -1.0) return s * std::log(x / x_ref);
    return s * (std::pow(x, half_nu + 1.0) - std::pow(x_ref, half_nu + 1.0)) / (half_nu + 1.0);
  }
  if (const auto* e = profile.as<MassProfile::Exponential1D>()) {
    if (e->n == 0) {
      const double s = std::sqrt(e->m0) / e->A;
      return s * (std::exp(e->A * x) - std::exp(e->A * x_ref));
    }
  }
  return numerics::adaptive_simpson(
      [&profile](double u) { return std::sqrt(profile.mass(u)); }, x_ref, x);
}

namespace {

/// Blow-up time refinement: near a pole x ~ 1/(t* - t), so 1/|x| crosses
/// zero linearly; extrapolate it through the last two samples.
double refine_blowup_time(const Trajectory& traj) {
  const auto& s = traj.samples;
  const double t_last = s.back().t;
  if (s.size() < 2) return t_last;
  const auto& a = s[s.size() - 2];
  const auto& b = s.back();
  const double ia = 1.0 / std::abs(a.state[0]);
  const double ib = 1.0 / std::abs(b.state[0]);
  if (!(ia > ib) || ia <= 0.0) return t_last;
  return b.t + ib * (b.t - a.t) / (ia - ib);
}

}  // namespace

ConfinementClass1D classify(const MassProfile& profile, const State1D& s0,
                            const ClassifyOptions& opt) {
  if (s0.xdot == 0.0) {
    throw PreconditionError("classify: the particle needs a non-zero initial velocity");
  }
  const double y0[] = {s0.x, s0.xdot};
  const auto rhs = [&profile](double, std::span<const double> y, std::span<double> dydt) {
    dydt[0] = y[1];
    dydt[1] = -0.5 * profile.log_derivative(y[0]) * y[1] * y[1];
  };
  // No position stop here: a finite-time blow-up always reaches the state
  // ceiling long before the horizon, and that is the signal we want.
  const Trajectory traj =
      numerics::integrate(rhs, y0, {0.0, opt.horizon}, opt.integrator);

  if (traj.diverged()) {
    return {ConfinementClass1D::Kind::UnboundedFiniteTimeBlowup, 0.0, 0.0,
            refine_blowup_time(traj)};
  }

  double lo = s0.x, hi = s0.x;
  for (const auto& smp : traj.samples) {
    lo = std::min(lo, smp.state[0]);
    hi = std::max(hi, smp.state[0]);
  }

  // Horizon exhausted without reaching infinity. The velocity never changes
  // sign (xdot = xdot0 sqrt(m(x0)/m(x)) != 0), so extrapolate with the
  // conservation law: if the particle would still move at a non-negligible
  // speed at the escape ceiling, it gets there eventually; otherwise it
  // creeps within a finite range for any practical horizon.
  const double x_at_ceiling = s0.xdot > 0.0 ? opt.x_ceiling : -opt.x_ceiling;
  double speed_ratio = 0.0;
  try {
    speed_ratio = std::sqrt(profile.mass(s0.x) / profile.mass(x_at_ceiling));
  } catch (const DomainError&) {
    speed_ratio = 0.0;  // mass overflow at the ceiling: infinitely heavy, stuck
  }
  if (speed_ratio >= opt.speed_floor_rel) {
    return {ConfinementClass1D::Kind::UnboundedAsymptotic, lo, hi, 0.0};
  }
  return {ConfinementClass1D::Kind::ConfinedFinite, lo, hi, 0.0};
}

}  // namespace pdm::dynamics1d
