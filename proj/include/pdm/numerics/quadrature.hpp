#pragma once

#include <functional>

namespace pdm::numerics {

/// Adaptive Simpson quadrature of f over [a, b] (a > b allowed, sign flips).
/// Recursion splits until the local Richardson estimate meets tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 60);

}  // namespace pdm::numerics
