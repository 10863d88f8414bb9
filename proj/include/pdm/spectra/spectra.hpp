#pragma once

#include <cstddef>
#include <vector>

#include "pdm/quantum/effective_potential.hpp"

namespace pdm::spectra {

using quantum::EffectivePotential;

struct SpectrumRequest {
  EffectivePotential potential;
  std::size_t n_states = 1;
  /// Interior grid points. 0 selects the default: 2000 for 1D, 4000 for the
  /// 2D radial problem (its singular centrifugal prefactor converges with a
  /// larger constant).
  std::size_t grid_points = 0;
  /// Permits solving a well_coeff == 0 potential (pure box between the
  /// walls) that classify reports as Free.
  bool allow_free = false;
};

struct Spectrum {
  std::vector<double> levels_scaled;     ///< ascending
  std::vector<double> levels_physical;   ///< via the stored affine backmap
  std::vector<double> estimated_error;   ///< Richardson estimate per level
  std::size_t grid_points_used = 0;
};

/// Lowest n_states eigenvalues of the Dirichlet finite-difference
/// Hamiltonian on the open z-interval. The grid excludes the singular
/// endpoints: z_i = z_lo + i h, i = 1..N, h = (z_hi - z_lo)/(N + 1); the
/// impenetrable walls become Dirichlet conditions. The error estimate
/// compares the N and N/2 grids (Richardson, O(h^2) scheme).
///
/// Throws NotBound unless the potential classifies as BoundStates (or is
/// Free with allow_free set).
Spectrum solve(const SpectrumRequest& req);

/// FD eigenvector on the same grid for a converged scaled level
/// (test support: node counting).
std::vector<double> solve_eigenvector(const EffectivePotential& pot,
                                      std::size_t grid_points, double level_scaled);

/// Analytic single-well ladder on (-pi/2, pi/2):
///   level_n = (n + lambda)^2 / (2 m0),  lambda >= 1
/// (lambda = 1 degenerates to the width-pi box ladder (n+1)^2/(2 m0)).
double pt_reference_1d(double lambda, double m0, std::size_t n);

/// Analytic two-term ladder on (0, pi/2) with unit kinetic prefactor:
///   level_n = (2n + lambda_sin + lambda_cos)^2
/// where centrifugal = lambda_sin(lambda_sin - 1), well = lambda_cos(lambda_cos - 1);
/// each lambda >= 1 with the value 1 meaning the corresponding term vanishes.
double pt_reference_2d(double lambda_sin, double lambda_cos, std::size_t n);

/// The lambda >= 1 root of lambda(lambda - 1) = c (c >= 0).
double lambda_from_coefficient(double c);

}  // namespace pdm::spectra
