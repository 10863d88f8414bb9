#include "pdm/profiles/mass_profile.hpp"

#include <cmath>

namespace pdm::profiles {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw PreconditionError(msg);
}

MassEval checked(MassEval e, double x) {
  if (!std::isfinite(e.m) || !std::isfinite(e.dm) || !std::isfinite(e.d2m)) {
    throw DomainError("mass profile: non-finite value at x=" + std::to_string(x));
  }
  if (e.m <= 0.0) {
    throw DomainError("mass profile: non-positive mass at x=" + std::to_string(x));
  }
  return e;
}

}  // namespace

MassProfile MassProfile::exponential1d(double A, int n, double m0) {
  require(A != 0.0, "Exponential1D: A must be non-zero (constant mass is excluded)");
  require(n >= 0, "Exponential1D: n must be a non-negative integer");
  require(m0 > 0.0, "Exponential1D: m0 must be positive");
  return MassProfile{Exponential1D{A, n, m0}};
}

MassProfile MassProfile::rational1d(double B, double m0) {
  require(B != 0.0, "Rational1D: B must be non-zero");
  require(m0 > 0.0, "Rational1D: m0 must be positive");
  return MassProfile{Rational1D{B, m0}};
}

MassProfile MassProfile::power_law_2d(double nu, double m0, double r0) {
  require(m0 > 0.0, "PowerLaw2D: m0 must be positive");
  require(r0 > 0.0, "PowerLaw2D: r0 must be positive");
  return MassProfile{PowerLaw2D{nu, m0, r0}};
}

MassProfile MassProfile::rational2d(double C, double m0, double r0) {
  require(C != 0.0, "Rational2D: C must be non-zero");
  require(m0 > 0.0, "Rational2D: m0 must be positive");
  require(r0 >= 0.0, "Rational2D: r0 must be non-negative");
  const double w = 1.0 + C * C * r0 * r0;
  return MassProfile{Rational2D{C, m0, r0, m0 * w * w}};
}

MassProfile MassProfile::custom(Callable m, Callable dm, Callable d2m) {
  require(m && dm && d2m, "Custom profile: all of m, m', m'' are required");
  return MassProfile{Custom{std::move(m), std::move(dm), std::move(d2m)}};
}

MassProfile MassProfile::constant(double m0) {
  require(m0 > 0.0, "constant profile: m0 must be positive");
  return custom([m0](double) { return m0; }, [](double) { return 0.0; },
                [](double) { return 0.0; });
}

MassEval MassProfile::eval(double x) const {
  return std::visit(
      [x](const auto& fam) -> MassEval {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Exponential1D>) {
          const double p = static_cast<double>(fam.n + 1);
          const double m = fam.m0 * std::exp(2.0 * fam.A / p * std::pow(x, p));
          const double u = 2.0 * fam.A * std::pow(x, fam.n);  // m'/m
          const double du = fam.n == 0
                                ? 0.0
                                : 2.0 * fam.A * fam.n * std::pow(x, fam.n - 1);
          return checked({m, m * u, m * (u * u + du)}, x);
        } else if constexpr (std::is_same_v<T, Rational1D>) {
          const double b2 = fam.B * fam.B;
          const double w = 1.0 + b2 * x * x;
          const double m = fam.m0 / (w * w);
          const double dm = -4.0 * b2 * x * fam.m0 / (w * w * w);
          const double d2m = -4.0 * b2 * fam.m0 * (1.0 - 5.0 * b2 * x * x) / (w * w * w * w);
          return checked({m, dm, d2m}, x);
        } else if constexpr (std::is_same_v<T, PowerLaw2D>) {
          if (x <= 0.0) throw DomainError("PowerLaw2D: defined only for r > 0");
          const double lam = fam.m0 * std::pow(fam.r0, -fam.nu);
          const double m = lam * std::pow(x, fam.nu);
          const double dm = lam * fam.nu * std::pow(x, fam.nu - 1.0);
          const double d2m = lam * fam.nu * (fam.nu - 1.0) * std::pow(x, fam.nu - 2.0);
          return checked({m, dm, d2m}, x);
        } else if constexpr (std::is_same_v<T, Rational2D>) {
          const double c2 = fam.C * fam.C;
          const double w = 1.0 + c2 * x * x;
          const double m = fam.c_tilde / (w * w);
          const double dm = -4.0 * c2 * x * fam.c_tilde / (w * w * w);
          const double d2m =
              -4.0 * c2 * fam.c_tilde * (1.0 - 5.0 * c2 * x * x) / (w * w * w * w);
          return checked({m, dm, d2m}, x);
        } else {
          return checked({fam.m(x), fam.dm(x), fam.d2m(x)}, x);
        }
      },
      family_);
}

double MassProfile::log_derivative(double x) const {
  if (const auto* e = as<Exponential1D>()) {
    return 2.0 * e->A * std::pow(x, e->n);
  }
  if (const auto* r1 = as<Rational1D>()) {
    const double b2 = r1->B * r1->B;
    return -4.0 * b2 * x / (1.0 + b2 * x * x);
  }
  if (const auto* pl = as<PowerLaw2D>()) {
    if (x <= 0.0) throw DomainError("PowerLaw2D: defined only for r > 0");
    return pl->nu / x;
  }
  if (const auto* r2 = as<Rational2D>()) {
    const double c2 = r2->C * r2->C;
    return -4.0 * c2 * x / (1.0 + c2 * x * x);
  }
  const MassEval e = eval(x);
  return e.dm / e.m;
}

ForceSignClass MassProfile::force_sign_class(double x, double xdot) const {
  const double u = log_derivative(x);
  if (u == 0.0 || xdot == 0.0) return ForceSignClass::Neutral;
  // d|xdot|/dt = -(1/2) (m'/m) xdot^2 sign(xdot)
  return u * xdot > 0.0 ? ForceSignClass::Damping : ForceSignClass::AntiDamping;
}

bool MassProfile::is_radial() const {
  return std::holds_alternative<PowerLaw2D>(family_) ||
         std::holds_alternative<Rational2D>(family_);
}

std::string MassProfile::family_name() const {
  return std::visit(
      [](const auto& fam) -> std::string {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Exponential1D>) return "exponential1d";
        else if constexpr (std::is_same_v<T, Rational1D>) return "rational1d";
        else if constexpr (std::is_same_v<T, PowerLaw2D>) return "powerlaw2d";
        else if constexpr (std::is_same_v<T, Rational2D>) return "rational2d";
        else return "custom";
      },
      family_);
}

}  // namespace pdm::profiles
