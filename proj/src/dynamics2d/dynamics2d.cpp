#include "pdm/dynamics2d/dynamics2d.hpp"

#include <cmath>

namespace pdm::dynamics2d {

PolarDerivatives polar_rhs(const MassProfile& g, const State2D& s) {
  if (s.r <= 0.0) throw DomainError("polar_rhs: r must be positive");
  const double gl = g.log_derivative(s.r);
  const double rddot = -0.5 * gl * s.rdot * s.rdot +
                       (1.0 + 0.5 * gl * s.r) * s.r * s.thetadot * s.thetadot;
  // thetaddot from d/dt [g r^2 thetadot] = 0.
  const double thetaddot = -(gl * s.rdot + 2.0 * s.rdot / s.r) * s.thetadot;
  return {s.rdot, s.thetadot, rddot, thetaddot};
}

PolarDerivatives polar_rhs_full(const MassProfile& g, const MassProfile& f,
                                const State2D& s) {
  if (s.r <= 0.0) throw DomainError("polar_rhs_full: r must be positive");
  const double gl = g.log_derivative(s.r);
  const double fl = f.log_derivative(s.theta);
  const double rddot = -0.5 * gl * s.rdot * s.rdot - fl * s.rdot * s.thetadot +
                       (1.0 + 0.5 * gl * s.r) * s.r * s.thetadot * s.thetadot;
  const double thetaddot =
      0.5 * fl * (s.rdot * s.rdot / (s.r * s.r) - s.thetadot * s.thetadot) -
      gl * s.rdot * s.thetadot - 2.0 * s.rdot * s.thetadot / s.r;
  return {s.rdot, s.thetadot, rddot, thetaddot};
}

AngularMomentum angular_momentum(const MassProfile& g, const State2D& s) {
  return {g.mass(s.r) * s.r * s.r * s.thetadot};
}

double radial_speed_sq(const MassProfile& g, double r, const State2D& init) {
  const double g0 = g.mass(init.r);
  const double K = g0 * init.r * init.r * init.thetadot;
  const double a_sq = g0 * init.rdot * init.rdot + K * K / (g0 * init.r * init.r);
  const double gr = g.mass(r);
  return (a_sq - K * K / (gr * r * r)) / gr;
}

Trajectory simulate_polar(const MassProfile& g, const State2D& s0, double t_end,
                          const SimulateOptions& opt) {
  if (s0.r <= 0.0) throw PreconditionError("simulate_polar: r0 must be positive");
  const double g0 = g.mass(s0.r);
  const double K = g0 * s0.r * s0.r * s0.thetadot;
  const double a_sq = g0 * s0.rdot * s0.rdot + K * K / (g0 * s0.r * s0.r);
  const double r_collapse = opt.collapse_fraction * s0.r;

  const double residual_scale = a_sq > 0.0 ? a_sq : 1.0;
  // Stash the last accepted state so failures near the coordinate
  // singularity can be told apart from genuine solver trouble.
  double last_r = s0.r, last_rdot = s0.rdot;
  const auto invariants = [&](double, std::span<const double> y) {
    // y is (r, theta, rdot[, thetadot]); K and the relative defect of the
    // radial energy relation g rdot^2 = a2 - K^2/(g r^2).
    const double r = y[0];
    const double gr = g.mass(r);
    const double thetadot =
        y.size() >= 4 ? y[3] : (K == 0.0 ? 0.0 : K / (gr * r * r));
    const double k_now = gr * r * r * thetadot;
    const double residual =
        (gr * y[2] * y[2] - (a_sq - (K == 0.0 ? 0.0 : K * K / (gr * r * r)))) /
        residual_scale;
    last_r = r;
    last_rdot = y[2];
    return std::vector<double>{k_now, residual};
  };
  const auto stop = [r_collapse](double, std::span<const double> y) {
    return y[0] <= r_collapse;
  };

  Trajectory traj;
  try {
    if (opt.enforce_angular_momentum) {
      const double y0[] = {s0.r, s0.theta, s0.rdot};
      const auto rhs = [&g, K](double, std::span<const double> y,
                               std::span<double> dydt) {
        const double r = y[0];
        const double gr = g.mass(r);
        const double thetadot = K == 0.0 ? 0.0 : K / (gr * r * r);
        const double gl = g.log_derivative(r);
        dydt[0] = y[2];
        dydt[1] = thetadot;
        dydt[2] = -0.5 * gl * y[2] * y[2] +
                  (1.0 + 0.5 * gl * r) * r * thetadot * thetadot;
      };
      traj =
          numerics::integrate(rhs, y0, {0.0, t_end}, opt.integrator, invariants, stop);
      // Widen samples to the full (r, theta, rdot, thetadot) state.
      for (auto& smp : traj.samples) {
        const double r = smp.state[0];
        smp.state.push_back(K == 0.0 ? 0.0 : K / (g.mass(r) * r * r));
      }
    } else {
      const double y0[] = {s0.r, s0.theta, s0.rdot, s0.thetadot};
      const auto rhs = [&g](double, std::span<const double> y, std::span<double> dydt) {
        const PolarDerivatives d = polar_rhs(g, {y[0], y[1], y[2], y[3]});
        dydt[0] = d.rdot;
        dydt[1] = d.thetadot;
        dydt[2] = d.rddot;
        dydt[3] = d.thetaddot;
      };
      traj =
          numerics::integrate(rhs, y0, {0.0, t_end}, opt.integrator, invariants, stop);
    }
  } catch (const CollapseToCenter&) {
    throw;
  } catch (const Error&) {
    if (last_r < 0.05 * s0.r && last_rdot < 0.0) {
      throw CollapseToCenter(
          "simulate_polar: the orbit reached the coordinate singularity at r = 0");
    }
    throw;
  }
  return traj;
}

RadialBound power_law_bound(double nu, double m0, double r0, double rdot0,
                            double thetadot0) {
  if (r0 <= 0.0) throw PreconditionError("power_law_bound: r0 must be positive");
  if (rdot0 == 0.0 && thetadot0 == 0.0)
    throw PreconditionError("power_law_bound: a static particle has no radial fate");
  const double K = m0 * r0 * r0 * thetadot0;  // g(r0) = m0
  if (K == 0.0) {
    // Purely radial motion has no centrifugal turning point.
    return {RadialBound::Kind::Unbounded};
  }
  if (nu == -2.0) {
    return {RadialBound::Kind::Spiral, 0.0, 0.0, 0.0, m0 * r0 * rdot0 / K};
  }
  if (nu > -2.0) return {RadialBound::Kind::Unbounded};
  const double kt_sq = K * K / (r0 * r0);
  const double b0_sq = m0 * m0 * rdot0 * rdot0 + kt_sq;
  const double r_max = r0 * std::pow(kt_sq / b0_sq, 1.0 / (nu + 2.0));
  return {RadialBound::Kind::MaxRadius, r_max};
}

double spiral_radius(double m0, double r0, double rdot0, double K, double theta) {
  if (K == 0.0) throw PreconditionError("spiral_radius: K must be non-zero");
  return r0 * std::exp(m0 * r0 * rdot0 / K * theta);
}

RadialBound rational_interval_from_invariants(double C, double c_tilde, double K,
                                              double a_sq) {
  if (C == 0.0) throw PreconditionError("rational interval: C must be non-zero");
  if (K == 0.0) throw PreconditionError("rational interval: K must be non-zero");
  const double l_tilde = std::sqrt(a_sq * c_tilde / (K * K));
  const double disc = 1.0 - 4.0 * C * C / (l_tilde * l_tilde);
  if (disc < 0.0) {
    // Real states always satisfy disc >= 0; allow rounding-level defects.
    if (disc < -1e-12) {
      throw NoRealRoots("rational interval: confinement inequality unsatisfiable");
    }
    const double r = 0.5 * l_tilde / (C * C);
    return {RadialBound::Kind::Interval, 0.0, r, r};
  }
  const double root = std::sqrt(disc);
  const double half = 0.5 * l_tilde / (C * C);
  return {RadialBound::Kind::Interval, 0.0, half * (1.0 - root), half * (1.0 + root)};
}

RadialBound rational_confinement_interval(double C, double m0, double r0,
                                          double rdot0, double thetadot0) {
  if (thetadot0 == 0.0)
    throw PreconditionError(
        "rational_confinement_interval: needs thetadot0 != 0 (K != 0)");
  const double w = 1.0 + C * C * r0 * r0;
  const double c_tilde = m0 * w * w;
  const double K = m0 * r0 * r0 * thetadot0;  // g(r0) = m0
  const double a_sq = m0 * rdot0 * rdot0 + K * K / (m0 * r0 * r0);
  return rational_interval_from_invariants(C, c_tilde, K, a_sq);
}

}  // namespace pdm::dynamics2d
