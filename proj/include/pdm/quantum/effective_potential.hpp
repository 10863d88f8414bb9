#pragma once

#include "pdm/quantum/ordering.hpp"

namespace pdm::quantum {

/// Poschl-Teller-form effective potential on a finite z-interval with
/// singular walls:
///
///   V(z) = well_coeff / cos^2 z + centrifugal_coeff / sin^2 z
///
/// acting in  -kinetic_prefactor d^2/dz^2 + V(z), eigenvalue "scaled level"
/// (the 1D problem uses prefactor 1/(2 m0); the reduced 2D radial problem
/// has unit prefactor). The physical energy is recovered by the affine
/// backmap E = backmap_scale * level + backmap_offset.
struct EffectivePotential {
  enum class Dimension { OneD, TwoDRadial };

  Dimension dimension;
  double well_coeff = 0.0;
  double centrifugal_coeff = 0.0;
  double z_lo = 0.0, z_hi = 0.0;
  double kinetic_prefactor = 1.0;
  double mass_scale = 1.0;  ///< m0 (1D) or Ct (2D radial)
  double backmap_scale = 1.0;
  double backmap_offset = 0.0;
  QuantumClass quantum_class{QuantumClass::Kind::Free};
  int m_quantum = 0;
  bool s_state_excluded = false;

  [[nodiscard]] double value(double z) const;
  [[nodiscard]] double to_physical(double scaled) const {
    return backmap_scale * scaled + backmap_offset;
  }
  [[nodiscard]] double to_scaled(double physical) const {
    return (physical - backmap_offset) / backmap_scale;
  }
};

/// 1D reduction for the rational mass m = m0/(1+B^2 x^2)^2:
/// well coefficient 2(5a-4b)/m0 on z in (-pi/2, pi/2), unit-free level
/// related to E by level = E/B^2 + (4/m0)(3a-2b).
EffectivePotential effective_potential_1d(const OrderingScheme& s, double B, double m0);

/// 2D radial reduction for the rational mass g = Ct/(1+C^2 r^2)^2 at
/// magnetic quantum number m_quantum: centrifugal coefficient m^2 - 1/4 and
/// well coefficient -(8 xi - 8k - 12 - m^2 + 1/4) on z in (0, pi/2);
/// level = 2 E Ct / C^2 - 8 xi + 12 k - 1.
EffectivePotential effective_potential_2d(const OrderingScheme& s, int m_quantum,
                                          double C, double m0, double r0);

/// Radial PCT angle z = arctan(C r) in [0, pi/2); the z = pi/2 wall is the
/// r -> infinity limit and is never attained at finite radius.
double pct_coordinate_2d(double C, double r);

}  // namespace pdm::quantum
