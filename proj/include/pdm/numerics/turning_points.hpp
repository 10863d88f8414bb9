#pragma once

#include <cstddef>
#include <vector>

#include "pdm/numerics/integrator.hpp"

namespace pdm::numerics {

struct TurningPoint {
  double t;      ///< refined time of the velocity sign change
  double value;  ///< interpolated position component at that time
};

/// Locates sign changes of a velocity component along a trajectory and
/// refines each with 3-point quadratic interpolation, reporting the paired
/// position component at the refined time.
///
/// Requires at least 3 samples. Returns an empty list for monotone motion.
std::vector<TurningPoint> find_turning_points(const Trajectory& traj,
                                              std::size_t velocity_component,
                                              std::size_t position_component);

/// Largest value of a state component along a trajectory, parabola-refined
/// around the discrete maximum (useful against analytic radial bounds).
double refined_component_max(const Trajectory& traj, std::size_t component);

}  // namespace pdm::numerics
