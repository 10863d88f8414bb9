#include "pdm/quantum/ordering.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace pdm::quantum {

OrderingScheme::OrderingScheme(std::string name, Rational j, Rational k, Rational l)
    : name_(std::move(name)), j_(j), k_(k), l_(l) {
  if (j + k + l != Rational(-1)) {
    throw PreconditionError("OrderingScheme '" + name_ + "': j + k + l must equal -1");
  }
}

const std::vector<OrderingScheme>& builtin_schemes() {
  static const std::vector<OrderingScheme> schemes = {
      {"ZhuKroemer", {-1, 2}, {0, 1}, {-1, 2}},
      {"MustafaMazharimousavi", {-1, 4}, {-1, 2}, {-1, 4}},
      {"BenDanielDuke", {0, 1}, {-1, 1}, {0, 1}},
      {"GoraWilliams", {-1, 1}, {0, 1}, {0, 1}},
      {"LiKuhn", {0, 1}, {-1, 2}, {-1, 2}},
  };
  return schemes;
}

const OrderingScheme* find_builtin(const std::string& name) {
  auto canon = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (std::isalnum(static_cast<unsigned char>(c))) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    }
    return out;
  };
  const std::string key = canon(name);
  for (const auto& s : builtin_schemes()) {
    if (canon(s.name()) == key) return &s;
  }
  // Common shorthands and spelling variants.
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"zk", "ZhuKroemer"},          {"mm", "MustafaMazharimousavi"},
      {"bdd", "BenDanielDuke"},      {"bendanieldduke", "BenDanielDuke"},
      {"gw", "GoraWilliams"},        {"gorawilliam", "GoraWilliams"},
      {"lk", "LiKuhn"},
  };
  for (const auto& [alias, target] : aliases) {
    if (key == alias) return find_builtin(target);
  }
  return nullptr;
}

AmbiguityCoefficients coefficients(const OrderingScheme& s) {
  const Rational &j = s.j(), &k = s.k(), &l = s.l();
  const Rational a = (Rational(1) + Rational(2) * k) / Rational(4);
  const Rational b = Rational(9, 16) + j * (j + k + Rational(1)) + k;
  const Rational xi =
      j * (j - Rational(1)) + l * (l - Rational(1)) - k * (k + Rational(1));
  return {a, b, xi};
}

QuantumClass classify_1d(const OrderingScheme& s) {
  const Rational strength = coefficients(s).well_strength_1d();
  if (strength.is_zero()) return {QuantumClass::Kind::Free};
  if (strength.sign() < 0) return {QuantumClass::Kind::Unphysical};
  // lambda (lambda - 1) = 4 (5a - 4b); keep the root >= 1.
  const double s4 = 4.0 * strength.to_double();
  const double lambda = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * s4));
  return {QuantumClass::Kind::BoundStates, lambda};
}

QuantumClass classify_2d(const OrderingScheme& s, int m_quantum) {
  if (m_quantum == 0) return {QuantumClass::Kind::SStateExcluded};
  const auto c = coefficients(s);
  const Rational m_sq(static_cast<std::int64_t>(m_quantum) * m_quantum);
  // bracket = 8 xi - 8k - 12 - m^2 + 1/4; bound states need bracket < 0.
  const Rational bracket = Rational(8) * c.xi - Rational(8) * s.k() - Rational(12) -
                           m_sq + Rational(1, 4);
  if (bracket.is_zero()) return {QuantumClass::Kind::Free};
  if (bracket.sign() > 0) return {QuantumClass::Kind::Unphysical};
  const double well = -bracket.to_double();
  const double lambda = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * well));
  return {QuantumClass::Kind::BoundStates, lambda};
}

std::string to_string(QuantumClass::Kind kind) {
  switch (kind) {
    case QuantumClass::Kind::BoundStates: return "BoundStates";
    case QuantumClass::Kind::Free: return "Free";
    case QuantumClass::Kind::Unphysical: return "Unphysical";
    case QuantumClass::Kind::SStateExcluded: return "SStateExcluded";
  }
  return "?";
}

}  // namespace pdm::quantum
