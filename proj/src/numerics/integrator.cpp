#include "pdm/numerics/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pdm::numerics {

namespace {

// Dormand-Prince 5(4) tableau. k7 is FSAL: it equals k1 of the next step.
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
// b - b*: weights of the embedded error estimate.
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

class Stepper {
 public:
  Stepper(const VectorField& rhs, std::size_t n) : rhs_(rhs), n_(n) {
    for (auto* k : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_}) k->resize(n);
    ytmp_.resize(n);
  }

  void eval(double t, std::span<const double> y, std::span<double> dydt) {
    rhs_(t, y, dydt);
    if (!all_finite(dydt)) throw NonFiniteState("integrate: vector field returned NaN/Inf");
  }

  /// One Dormand-Prince step from (t, y) with step h. Writes the 5th-order
  /// solution to y_out and returns the scaled error norm.
  double dp54_step(double t, std::span<const double> y, double h,
                   std::span<double> y_out, double atol, double rtol,
                   bool k1_valid) {
    if (!k1_valid) eval(t, y, k1_);
    auto stage = [&](std::span<double> out, auto&&... coeff_k) {
      for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        ((acc += coeff_k.first * coeff_k.second[i]), ...);
        out[i] = y[i] + h * acc;
      }
    };
    using P = std::pair<double, const std::vector<double>&>;
    stage(ytmp_, P{kA21, k1_});
    eval(t + kC2 * h, ytmp_, k2_);
    stage(ytmp_, P{kA31, k1_}, P{kA32, k2_});
    eval(t + kC3 * h, ytmp_, k3_);
    stage(ytmp_, P{kA41, k1_}, P{kA42, k2_}, P{kA43, k3_});
    eval(t + kC4 * h, ytmp_, k4_);
    stage(ytmp_, P{kA51, k1_}, P{kA52, k2_}, P{kA53, k3_}, P{kA54, k4_});
    eval(t + kC5 * h, ytmp_, k5_);
    stage(ytmp_, P{kA61, k1_}, P{kA62, k2_}, P{kA63, k3_}, P{kA64, k4_}, P{kA65, k5_});
    eval(t + h, ytmp_, k6_);
    stage(y_out, P{kB1, k1_}, P{kB3, k3_}, P{kB4, k4_}, P{kB5, k5_}, P{kB6, k6_});
    eval(t + h, y_out, k7_);

    double err_sq = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double e = h * (kE1 * k1_[i] + kE3 * k3_[i] + kE4 * k4_[i] +
                            kE5 * k5_[i] + kE6 * k6_[i] + kE7 * k7_[i]);
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y_out[i]));
      err_sq += (e / sc) * (e / sc);
    }
    return std::sqrt(err_sq / static_cast<double>(n_));
  }

  void rk4_step(double t, std::span<const double> y, double h, std::span<double> y_out) {
    eval(t, y, k1_);
    for (std::size_t i = 0; i < n_; ++i) ytmp_[i] = y[i] + 0.5 * h * k1_[i];
    eval(t + 0.5 * h, ytmp_, k2_);
    for (std::size_t i = 0; i < n_; ++i) ytmp_[i] = y[i] + 0.5 * h * k2_[i];
    eval(t + 0.5 * h, ytmp_, k3_);
    for (std::size_t i = 0; i < n_; ++i) ytmp_[i] = y[i] + h * k3_[i];
    eval(t + h, ytmp_, k4_);
    for (std::size_t i = 0; i < n_; ++i) {
      y_out[i] = y[i] + h / 6.0 * (k1_[i] + 2 * k2_[i] + 2 * k3_[i] + k4_[i]);
    }
  }

  void promote_fsal() { k1_.swap(k7_); }
  void prime_k1(double t, std::span<const double> y) { eval(t, y, k1_); }
  [[nodiscard]] std::span<const double> k1() const { return k1_; }

 private:
  const VectorField& rhs_;
  std::size_t n_;
  std::vector<double> k1_, k2_, k3_, k4_, k5_, k6_, k7_, ytmp_;
};

/// Hairer/Norsett/Wanner starting-step heuristic for an order-5 method.
double initial_step(const Stepper& stepper, std::span<const double> y0,
                    double span, double atol, double rtol) {
  double d0 = 0.0, d1 = 0.0;
  const auto f0 = stepper.k1();
  for (std::size_t i = 0; i < y0.size(); ++i) {
    const double sc = atol + rtol * std::abs(y0[i]);
    d0 = std::max(d0, std::abs(y0[i]) / sc);
    d1 = std::max(d1, std::abs(f0[i]) / sc);
  }
  double h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * (d0 / d1);
  return std::min(h, span);
}

}  // namespace

Trajectory integrate(const VectorField& rhs, std::span<const double> y0,
                     std::pair<double, double> t_span, const IntegratorConfig& config,
                     const InvariantFn& invariants, const StopCondition& stop_when) {
  const auto [t0, t1] = t_span;
  if (!(t1 > t0)) throw PreconditionError("integrate: t_span must be forward and non-degenerate");
  if (config.abs_tol <= 0 || config.rel_tol <= 0)
    throw PreconditionError("integrate: tolerances must be positive");
  if (config.max_steps == 0) throw PreconditionError("integrate: max_steps must be positive");
  if (!all_finite(y0)) throw PreconditionError("integrate: non-finite initial state");

  const std::size_t n = y0.size();
  Stepper stepper(rhs, n);
  std::vector<double> y(y0.begin(), y0.end());
  std::vector<double> y_next(n);

  Trajectory traj;
  auto record = [&](double t, const std::vector<double>& state) {
    TrajectorySample s{t, state, {}};
    if (invariants) s.invariants = invariants(t, state);
    traj.samples.push_back(std::move(s));
  };
  record(t0, y);

  if (config.method == IntegratorConfig::Method::FixedRk4) {
    if (config.max_step <= 0)
      throw PreconditionError("integrate: FixedRk4 requires max_step > 0 as the step size");
    double t = t0;
    for (std::size_t step = 0; step < config.max_steps && t < t1; ++step) {
      const double h = std::min(config.max_step, t1 - t);
      stepper.rk4_step(t, y, h, y_next);
      t = (t + h >= t1) ? t1 : t + h;
      y.swap(y_next);
      record(t, y);
      if (max_abs(y) >= config.divergence_ceiling) {
        traj.stop = StopReason::Diverged;
        return traj;
      }
      if (stop_when && stop_when(t, y)) {
        traj.stop = StopReason::EventStop;
        return traj;
      }
    }
    if (t < t1) throw StepFailure("integrate: step budget exhausted before t_end");
    return traj;
  }

  // Adaptive Dormand-Prince 5(4).
  stepper.prime_k1(t0, y);
  double t = t0;
  double h = initial_step(stepper, y, t1 - t0, config.abs_tol, config.rel_tol);
  if (config.max_step > 0) h = std::min(h, config.max_step);
  bool k1_valid = true;

  std::size_t steps = 0;
  while (t < t1) {
    if (++steps > config.max_steps)
      throw StepFailure("integrate: step budget exhausted before t_end");
    const bool clipped = t + h >= t1;
    const double h_try = clipped ? t1 - t : h;
    const double err = stepper.dp54_step(t, y, h_try, y_next, config.abs_tol,
                                         config.rel_tol, k1_valid);
    if (err <= 1.0) {
      t = clipped ? t1 : t + h_try;
      y.swap(y_next);
      stepper.promote_fsal();
      k1_valid = true;
      record(t, y);
      if (max_abs(y) >= config.divergence_ceiling) {
        traj.stop = StopReason::Diverged;
        return traj;
      }
      if (stop_when && stop_when(t, y)) {
        traj.stop = StopReason::EventStop;
        return traj;
      }
      double factor = (err == 0.0) ? 5.0 : 0.9 * std::pow(err, -0.2);
      factor = std::clamp(factor, 0.2, 5.0);
      h = h_try * factor;
    } else {
      const double factor = std::max(0.2, 0.9 * std::pow(err, -0.2));
      h = h_try * factor;
      k1_valid = true;  // k1 is still f(t, y); stages 2..7 are discarded
    }
    if (config.max_step > 0) h = std::min(h, config.max_step);
    // Floor relative to the current time, so steps can keep shrinking on the
    // approach to a finite-time singularity inside a long span.
    const double h_floor = 16.0 * std::numeric_limits<double>::epsilon() *
                           std::max(std::abs(t), 1e-3 * (t1 - t0));
    if (h < h_floor) {
      if (max_abs(y) >= 1e-6 * config.divergence_ceiling) {
        // Underflow while the state races toward the ceiling: this is the
        // singularity itself, not a solver failure.
        traj.stop = StopReason::Diverged;
        return traj;
      }
      throw StepFailure("integrate: step size underflow (stiffness or singularity)");
    }
  }
  return traj;
}

}  // namespace pdm::numerics
