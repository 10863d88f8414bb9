#include "pdm/numerics/turning_points.hpp"

#include <algorithm>
#include <cmath>

namespace pdm::numerics {

namespace {

/// Quadratic y(t) through three samples, evaluated at t (Newton form).
double quad_interp(double t, double t0, double y0, double t1, double y1,
                   double t2, double y2) {
  const double c1 = (y1 - y0) / (t1 - t0);
  const double c2 = ((y2 - y1) / (t2 - t1) - c1) / (t2 - t0);
  return y0 + c1 * (t - t0) + c2 * (t - t0) * (t - t1);
}

/// Root of the same quadratic inside [lo, hi]; falls back to the secant
/// through (lo, hi) when the parabola has no root in the bracket.
double quad_root(double lo, double v_lo, double hi, double v_hi, double t0,
                 double y0, double t1, double y1, double t2, double y2) {
  const double c1 = (y1 - y0) / (t1 - t0);
  const double c2 = ((y2 - y1) / (t2 - t1) - c1) / (t2 - t0);
  // y = a s^2 + b s + c with s = t - t0.
  const double a = c2;
  const double b = c1 - c2 * (t1 - t0);
  const double c = y0;
  const double secant = lo - v_lo * (hi - lo) / (v_hi - v_lo);
  if (a == 0.0) {
    if (b == 0.0) return secant;
    const double s = -c / b;
    const double t = t0 + s;
    return (t >= lo && t <= hi) ? t : secant;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return secant;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  for (const double s : {q / a, c / q}) {
    const double t = t0 + s;
    if (t >= lo && t <= hi) return t;
  }
  return secant;
}

}  // namespace

std::vector<TurningPoint> find_turning_points(const Trajectory& traj,
                                              std::size_t velocity_component,
                                              std::size_t position_component) {
  const auto& s = traj.samples;
  if (s.size() < 3)
    throw PreconditionError("find_turning_points: need at least 3 samples");

  double v_scale = 0.0;
  for (const auto& smp : s)
    v_scale = std::max(v_scale, std::abs(smp.state[velocity_component]));
  const double noise_floor = 1e-12 * v_scale;

  std::vector<TurningPoint> result;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double v0 = s[i].state[velocity_component];
    const double v1 = s[i + 1].state[velocity_component];
    if (!(v0 * v1 < 0.0)) continue;
    if (std::abs(v0) < noise_floor && std::abs(v1) < noise_floor) continue;

    // Three samples around the crossing for the local quadratic model.
    const std::size_t j = (i == 0) ? 0 : i - 1;
    const auto &p0 = s[j], &p1 = s[j + 1], &p2 = s[j + 2];
    const double t_star = quad_root(
        s[i].t, v0, s[i + 1].t, v1, p0.t, p0.state[velocity_component], p1.t,
        p1.state[velocity_component], p2.t, p2.state[velocity_component]);
    const double value = quad_interp(
        t_star, p0.t, p0.state[position_component], p1.t,
        p1.state[position_component], p2.t, p2.state[position_component]);
    result.push_back({t_star, value});
  }
  return result;
}

double refined_component_max(const Trajectory& traj, std::size_t component) {
  const auto& s = traj.samples;
  if (s.empty()) throw PreconditionError("refined_component_max: empty trajectory");
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].state[component] > s[best].state[component]) best = i;
  }
  const double y_best = s[best].state[component];
  if (best == 0 || best + 1 == s.size()) return y_best;

  const auto &p0 = s[best - 1], &p1 = s[best], &p2 = s[best + 1];
  const double c1 = (p1.state[component] - p0.state[component]) / (p1.t - p0.t);
  const double c2 = ((p2.state[component] - p1.state[component]) / (p2.t - p1.t) - c1) /
                    (p2.t - p0.t);
  if (c2 >= 0.0) return y_best;  // not locally concave; keep the sample
  const double t_vertex = 0.5 * (p0.t + p1.t - c1 / c2);
  if (t_vertex < p0.t || t_vertex > p2.t) return y_best;
  const double y_vertex = quad_interp(t_vertex, p0.t, p0.state[component], p1.t,
                                      p1.state[component], p2.t, p2.state[component]);
  return std::max(y_vertex, y_best);
}

}  // namespace pdm::numerics
