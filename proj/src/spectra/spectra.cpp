#include "pdm/spectra/spectra.hpp"

#include <cmath>

#include "pdm/numerics/tridiagonal.hpp"

namespace pdm::spectra {

namespace {

constexpr std::size_t kDefaultGrid1D = 2000;
constexpr std::size_t kDefaultGrid2D = 4000;
// Richardson |E_N - E_{N/2}| / (ratio^2 - 1) estimates the leading O(h^2)
// error but misses the h^4 tail; the safety factor keeps it an upper bound.
constexpr double kRichardsonSafety = 1.25;

std::size_t effective_grid(const SpectrumRequest& req) {
  if (req.grid_points != 0) return req.grid_points;
  return req.potential.dimension == EffectivePotential::Dimension::TwoDRadial
             ? kDefaultGrid2D
             : kDefaultGrid1D;
}

std::vector<double> fd_levels(const EffectivePotential& pot, std::size_t n_grid,
                              std::size_t n_states) {
  const double h = (pot.z_hi - pot.z_lo) / static_cast<double>(n_grid + 1);
  const double kin = pot.kinetic_prefactor / (h * h);
  std::vector<double> diag(n_grid);
  std::vector<double> off(n_grid - 1, -kin);
  for (std::size_t i = 0; i < n_grid; ++i) {
    const double z = pot.z_lo + h * static_cast<double>(i + 1);
    diag[i] = 2.0 * kin + pot.value(z);
  }
  return numerics::eigen_tridiagonal(diag, off, n_states);
}

}  // namespace

double lambda_from_coefficient(double c) {
  if (c < 0.0) throw PreconditionError("lambda_from_coefficient: needs c >= 0");
  return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * c));
}

Spectrum solve(const SpectrumRequest& req) {
  const auto& pot = req.potential;
  if (req.n_states < 1) throw PreconditionError("solve: n_states must be >= 1");
  const std::size_t n_grid = effective_grid(req);
  if (n_grid < 64) throw PreconditionError("solve: grid_points must be >= 64");

  const auto kind = pot.quantum_class.kind;
  const bool free_ok = req.allow_free && kind == quantum::QuantumClass::Kind::Free;
  if (!(kind == quantum::QuantumClass::Kind::BoundStates || free_ok)) {
    throw NotBound("solve: potential class is " + quantum::to_string(kind) +
                   "; bound-state spectrum undefined");
  }
  if (req.n_states > n_grid / 2)
    throw PreconditionError(
        "solve: n_states must fit the coarse error-estimate grid (grid_points/2)");

  const auto fine = fd_levels(pot, n_grid, req.n_states);
  const auto coarse = fd_levels(pot, n_grid / 2, req.n_states);

  const double h_fine = 1.0 / static_cast<double>(n_grid + 1);
  const double h_coarse = 1.0 / static_cast<double>(n_grid / 2 + 1);
  const double ratio_sq = (h_coarse / h_fine) * (h_coarse / h_fine);

  Spectrum out;
  out.grid_points_used = n_grid;
  out.levels_scaled = fine;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    out.levels_physical.push_back(pot.to_physical(fine[i]));
    out.estimated_error.push_back(kRichardsonSafety * std::abs(fine[i] - coarse[i]) /
                                  (ratio_sq - 1.0));
  }
  return out;
}

std::vector<double> solve_eigenvector(const EffectivePotential& pot,
                                      std::size_t grid_points, double level_scaled) {
  const double h = (pot.z_hi - pot.z_lo) / static_cast<double>(grid_points + 1);
  const double kin = pot.kinetic_prefactor / (h * h);
  std::vector<double> diag(grid_points);
  std::vector<double> off(grid_points - 1, -kin);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double z = pot.z_lo + h * static_cast<double>(i + 1);
    diag[i] = 2.0 * kin + pot.value(z);
  }
  return numerics::tridiagonal_eigenvector(diag, off, level_scaled);
}

double pt_reference_1d(double lambda, double m0, std::size_t n) {
  if (lambda < 1.0) throw PreconditionError("pt_reference_1d: needs lambda >= 1");
  if (m0 <= 0.0) throw PreconditionError("pt_reference_1d: needs m0 > 0");
  const double s = static_cast<double>(n) + lambda;
  return s * s / (2.0 * m0);
}

double pt_reference_2d(double lambda_sin, double lambda_cos, std::size_t n) {
  if (lambda_sin < 1.0 || lambda_cos < 1.0)
    throw PreconditionError("pt_reference_2d: needs lambda_sin, lambda_cos >= 1");
  const double s = 2.0 * static_cast<double>(n) + lambda_sin + lambda_cos;
  return s * s;
}

}  // namespace pdm::spectra
