#pragma once

#include <functional>
#include <string>
#include <variant>

#include "pdm/errors.hpp"

namespace pdm::profiles {

/// Outcome of evaluating a profile at one point.
struct MassEval {
  double m;    ///< mass
  double dm;   ///< dm/dx
  double d2m;  ///< d^2m/dx^2
};

enum class ForceSignClass { Damping, AntiDamping, Neutral };

/// A positive position-dependent mass with analytic first and second
/// derivatives.
///
/// Built-in families:
///   Exponential1D  m(x) = m0 exp(2A x^{n+1} / (n+1)),  A != 0, n >= 0
///   Rational1D     m(x) = m0 / (1 + B^2 x^2)^2,        B != 0
///   PowerLaw2D     m(r) = m0 (r/r0)^nu,                r > 0
///   Rational2D     m(r) = Ct / (1 + C^2 r^2)^2,  Ct = m0 (1 + C^2 r0^2)^2
/// plus Custom built from three user callables (m, m', m'').
///
/// Profiles are immutable after construction and freely shareable.
class MassProfile {
 public:
  using Callable = std::function<double(double)>;

  struct Exponential1D {
    double A;
    int n;
    double m0;
  };
  struct Rational1D {
    double B;
    double m0;
  };
  struct PowerLaw2D {
    double nu;
    double m0;
    double r0;
  };
  struct Rational2D {
    double C;
    double m0;
    double r0;
    double c_tilde;  ///< m0 (1 + C^2 r0^2)^2, so m(r0) == m0 exactly
  };
  struct Custom {
    Callable m;
    Callable dm;
    Callable d2m;
  };

  static MassProfile exponential1d(double A, int n, double m0);
  static MassProfile rational1d(double B, double m0);
  static MassProfile power_law_2d(double nu, double m0, double r0);
  static MassProfile rational2d(double C, double m0, double r0);
  /// All three callables are required; derivatives are never approximated
  /// internally.
  static MassProfile custom(Callable m, Callable dm, Callable d2m);
  static MassProfile constant(double m0);

  /// m, m', m'' at x. Throws DomainError where the mass is non-positive,
  /// non-finite, or x is outside the family domain.
  [[nodiscard]] MassEval eval(double x) const;
  [[nodiscard]] double mass(double x) const { return eval(x).m; }

  /// m'(x)/m(x); exact 2A x^n for the exponential family.
  [[nodiscard]] double log_derivative(double x) const;

  /// Nature of the byproducted force for a particle at x with velocity xdot:
  /// Damping slows |xdot| down, AntiDamping speeds it up, Neutral leaves it.
  [[nodiscard]] ForceSignClass force_sign_class(double x, double xdot) const;

  [[nodiscard]] bool is_radial() const;   ///< 2D families (domain r > 0)
  [[nodiscard]] std::string family_name() const;

  template <class F>
  [[nodiscard]] const F* as() const {
    return std::get_if<F>(&family_);
  }

 private:
  using FamilyVariant = std::variant<Exponential1D, Rational1D, PowerLaw2D, Rational2D, Custom>;
  explicit MassProfile(FamilyVariant family) : family_(std::move(family)) {}

  FamilyVariant family_;
};

}  // namespace pdm::profiles
