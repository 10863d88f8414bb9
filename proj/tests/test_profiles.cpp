#include <doctest.h>

#include <cmath>
#include <random>

#include "pdm/profiles/mass_profile.hpp"

using pdm::profiles::ForceSignClass;
using pdm::profiles::MassProfile;

TEST_CASE("exponential family values and derivatives") {
  const auto p = MassProfile::exponential1d(1.0, 0, 1.0);
  const auto e = p.eval(0.0);
  CHECK(e.m == doctest::Approx(1.0));
  CHECK(e.dm == doctest::Approx(2.0));
  CHECK(e.d2m == doctest::Approx(4.0));
  CHECK(p.log_derivative(0.7) == doctest::Approx(2.0));  // 2A x^0

  const auto q = MassProfile::exponential1d(2.0, 1, 1.0);
  CHECK(q.log_derivative(3.0) == 12.0);  // 2A x^n exactly
}

TEST_CASE("rational 1D values and derivatives") {
  const auto p = MassProfile::rational1d(1.0, 1.0);
  const auto e = p.eval(0.0);
  CHECK(e.m == doctest::Approx(1.0));
  CHECK(e.dm == doctest::Approx(0.0));
  CHECK(e.d2m == doctest::Approx(-4.0));
  CHECK(p.log_derivative(0.0) == 0.0);
}

TEST_CASE("rational 2D profile honors its reference point") {
  const auto p = MassProfile::rational2d(1.0, 1.0, 1.0);
  CHECK(p.log_derivative(1.0) == doctest::Approx(-2.0));
  // m(r0) = m0 to machine precision for random parameters.
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> par(0.2, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double C = par(rng), m0 = par(rng), r0 = par(rng);
    const auto q = MassProfile::rational2d(C, m0, r0);
    CHECK(q.mass(r0) == doctest::Approx(m0).epsilon(1e-15));
  }
}

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(MassProfile::exponential1d(0.0, 0, 1.0), pdm::PreconditionError);
  CHECK_THROWS_AS(MassProfile::exponential1d(1.0, -1, 1.0), pdm::PreconditionError);
  CHECK_THROWS_AS(MassProfile::exponential1d(1.0, 0, 0.0), pdm::PreconditionError);
  CHECK_THROWS_AS(MassProfile::rational1d(0.0, 1.0), pdm::PreconditionError);
  CHECK_THROWS_AS(MassProfile::rational2d(0.0, 1.0, 1.0), pdm::PreconditionError);
  CHECK_THROWS_AS(MassProfile::power_law_2d(-2.0, 1.0, 0.0), pdm::PreconditionError);
  CHECK_THROWS_AS(MassProfile::custom(nullptr, nullptr, nullptr),
                  pdm::PreconditionError);
}

TEST_CASE("power law domain is r > 0") {
  const auto p = MassProfile::power_law_2d(-2.0, 1.0, 1.0);
  CHECK_THROWS_AS(static_cast<void>(p.eval(0.0)), pdm::DomainError);
  CHECK_THROWS_AS(static_cast<void>(p.eval(-1.0)), pdm::DomainError);
  CHECK(p.mass(2.0) == doctest::Approx(0.25));
  CHECK(p.log_derivative(2.0) == doctest::Approx(-1.0));
}

TEST_CASE("force sign classification") {
  const auto exp0 = MassProfile::exponential1d(1.0, 0, 1.0);
  CHECK(exp0.force_sign_class(0.0, 1.0) == ForceSignClass::Damping);
  CHECK(exp0.force_sign_class(0.0, -1.0) == ForceSignClass::AntiDamping);

  const auto flat = MassProfile::constant(2.5);
  CHECK(flat.force_sign_class(3.0, 1.0) == ForceSignClass::Neutral);

  const auto rat = MassProfile::rational1d(1.0, 1.0);
  CHECK(rat.force_sign_class(1.0, 1.0) == ForceSignClass::AntiDamping);
  CHECK(rat.force_sign_class(0.0, 1.0) == ForceSignClass::Neutral);
}

TEST_CASE("analytic derivatives match finite differences") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> par(0.3, 2.0);
  std::uniform_real_distribution<double> sgn(-1.0, 1.0);
  std::uniform_int_distribution<int> power(0, 3);

  auto check_profile = [&](const MassProfile& p, double x) {
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    const auto e = p.eval(x);
    const double dm_fd = (p.eval(x + h).m - p.eval(x - h).m) / (2.0 * h);
    const double d2m_fd = (p.eval(x + h).dm - p.eval(x - h).dm) / (2.0 * h);
    const double scale_1 = std::max(std::abs(e.dm), 1e-8);
    const double scale_2 = std::max(std::abs(e.d2m), 1e-8);
    CHECK(std::abs(e.dm - dm_fd) / scale_1 < 1e-6);
    CHECK(std::abs(e.d2m - d2m_fd) / scale_2 < 1e-6);
  };

  for (int i = 0; i < 100; ++i) {
    const double a = sgn(rng) >= 0 ? par(rng) : -par(rng);
    const int n = power(rng);
    const double x = 1.5 * sgn(rng);
    check_profile(MassProfile::exponential1d(a, n, par(rng)), x);
    check_profile(MassProfile::rational1d(a, par(rng)), 2.0 * sgn(rng));
    check_profile(MassProfile::power_law_2d(3.0 * sgn(rng), par(rng), par(rng)),
                  par(rng));
    check_profile(MassProfile::rational2d(a, par(rng), par(rng)), par(rng));
  }
}

TEST_CASE("exponential log-derivative identity holds at random points") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> par(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    double a = par(rng);
    if (a == 0.0) a = 0.5;
    const int n = static_cast<int>(std::abs(par(rng)));
    const double x = par(rng);
    const auto p = MassProfile::exponential1d(a, n, 1.3);
    CHECK(p.log_derivative(x) == 2.0 * a * std::pow(x, n));
  }
}

TEST_CASE("mass overflow reports a domain error") {
  const auto p = MassProfile::exponential1d(1.0, 0, 1.0);
  CHECK_THROWS_AS(static_cast<void>(p.eval(1e4)), pdm::DomainError);
}
