#pragma once

#include <string>
#include <vector>

#include "pdm/rational.hpp"

namespace pdm::quantum {

/// Kinetic-energy ordering triple (j, k, l) with j + k + l = -1, kept in
/// exact rational arithmetic: the free/unphysical boundary is an exact zero
/// and must not be blurred by floating point.
class OrderingScheme {
 public:
  OrderingScheme(std::string name, Rational j, Rational k, Rational l);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const Rational& j() const { return j_; }
  [[nodiscard]] const Rational& k() const { return k_; }
  [[nodiscard]] const Rational& l() const { return l_; }

 private:
  std::string name_;
  Rational j_, k_, l_;
};

/// Derived ordering coefficients:
///   a  = (1 + 2k)/4
///   b  = 9/16 + j (j + k + 1) + k
///   xi = j (j - 1) + l (l - 1) - k (k + 1)
struct AmbiguityCoefficients {
  Rational a;
  Rational b;
  Rational xi;

  [[nodiscard]] Rational well_strength_1d() const { return Rational(5) * a - Rational(4) * b; }
};

/// Spectral character of the effective problem for one ordering.
struct QuantumClass {
  enum class Kind {
    BoundStates,     ///< attractive-wall well, discrete ladder (lambda > 1)
    Free,            ///< the well term vanishes identically
    Unphysical,      ///< well coefficient of the wrong sign (imaginary states)
    SStateExcluded,  ///< 2D m_quantum = 0: lost to the centrifugal condition
  };
  Kind kind;
  double lambda = 0.0;  ///< ladder index, valid for BoundStates

  [[nodiscard]] bool bound() const { return kind == Kind::BoundStates; }
};

std::string to_string(QuantumClass::Kind kind);

/// The five literature orderings: ZhuKroemer (-1/2, 0, -1/2),
/// MustafaMazharimousavi (-1/4, -1/2, -1/4), BenDanielDuke (0, -1, 0),
/// GoraWilliams (-1, 0, 0), LiKuhn (0, -1/2, -1/2).
const std::vector<OrderingScheme>& builtin_schemes();

/// Looks a built-in up by a forgiving name (case/punctuation-insensitive,
/// common abbreviations). Returns nullptr when unknown.
const OrderingScheme* find_builtin(const std::string& name);

AmbiguityCoefficients coefficients(const OrderingScheme& s);

/// 1D verdict from the sign of 5a - 4b (exact): positive -> BoundStates
/// with lambda(lambda-1) = 4(5a-4b), zero -> Free, negative -> Unphysical.
QuantumClass classify_1d(const OrderingScheme& s);

/// 2D verdict for magnetic quantum number m_quantum: bound iff
/// 8 xi - 8k - 12 - m^2 + 1/4 < 0 and m^2 - 1/4 > 0. m_quantum = 0 is
/// always excluded (S-states are lost).
QuantumClass classify_2d(const OrderingScheme& s, int m_quantum);

}  // namespace pdm::quantum
