#include "pdm/quantum/effective_potential.hpp"

#include <cmath>

namespace pdm::quantum {

double EffectivePotential::value(double z) const {
  double v = 0.0;
  if (well_coeff != 0.0) {
    const double c = std::cos(z);
    v += well_coeff / (c * c);
  }
  if (centrifugal_coeff != 0.0) {
    const double s = std::sin(z);
    v += centrifugal_coeff / (s * s);
  }
  return v;
}

EffectivePotential effective_potential_1d(const OrderingScheme& s, double B, double m0) {
  if (B == 0.0) throw PreconditionError("effective_potential_1d: B must be non-zero");
  if (m0 <= 0.0) throw PreconditionError("effective_potential_1d: m0 must be positive");
  const auto c = coefficients(s);
  const double strength = c.well_strength_1d().to_double();  // 5a - 4b
  const double shift = (Rational(3) * c.a - Rational(2) * c.b).to_double();  // 3a - 2b

  EffectivePotential pot;
  pot.dimension = EffectivePotential::Dimension::OneD;
  pot.well_coeff = 2.0 * strength / m0;
  pot.centrifugal_coeff = 0.0;
  pot.z_lo = -M_PI / 2.0;
  pot.z_hi = M_PI / 2.0;
  pot.kinetic_prefactor = 1.0 / (2.0 * m0);
  pot.mass_scale = m0;
  // level = E/B^2 + (4/m0)(3a-2b)  =>  E = B^2 level - B^2 (4/m0)(3a-2b)
  pot.backmap_scale = B * B;
  pot.backmap_offset = -B * B * 4.0 / m0 * shift;
  pot.quantum_class = classify_1d(s);
  return pot;
}

EffectivePotential effective_potential_2d(const OrderingScheme& s, int m_quantum,
                                          double C, double m0, double r0) {
  if (C == 0.0) throw PreconditionError("effective_potential_2d: C must be non-zero");
  if (m0 <= 0.0) throw PreconditionError("effective_potential_2d: m0 must be positive");
  if (r0 < 0.0) throw PreconditionError("effective_potential_2d: r0 must be non-negative");
  const auto c = coefficients(s);
  const double m_sq = static_cast<double>(m_quantum) * m_quantum;
  const double xi = c.xi.to_double();
  const double k = s.k().to_double();
  const double bracket = 8.0 * xi - 8.0 * k - 12.0 - m_sq + 0.25;
  const double w = 1.0 + C * C * r0 * r0;
  const double c_tilde = m0 * w * w;

  EffectivePotential pot;
  pot.dimension = EffectivePotential::Dimension::TwoDRadial;
  pot.well_coeff = -bracket;
  pot.centrifugal_coeff = m_sq - 0.25;
  pot.z_lo = 0.0;
  pot.z_hi = M_PI / 2.0;
  pot.kinetic_prefactor = 1.0;
  pot.mass_scale = c_tilde;
  // level = 2 E Ct / C^2 - 8 xi + 12 k - 1
  pot.backmap_scale = C * C / (2.0 * c_tilde);
  pot.backmap_offset = C * C / (2.0 * c_tilde) * (8.0 * xi - 12.0 * k + 1.0);
  pot.quantum_class = classify_2d(s, m_quantum);
  pot.m_quantum = m_quantum;
  pot.s_state_excluded = (m_quantum == 0);
  return pot;
}

double pct_coordinate_2d(double C, double r) {
  if (r < 0.0) throw PreconditionError("pct_coordinate_2d: r must be non-negative");
  return std::atan(C * r);
}

}  // namespace pdm::quantum
