#include "pdm/rational.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

namespace pdm {

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) throw PreconditionError("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::from_double(double value, std::int64_t max_den, double tol) {
  if (!std::isfinite(value)) throw PreconditionError("Rational::from_double: non-finite input");
  // Continued-fraction convergents p/q with q capped at max_den.
  double x = value;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(x);
    if (fl > 9e17 || fl < -9e17) break;
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t p2 = a * p1 + p0;
    const std::int64_t q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double rem = x - fl;
    if (rem < 1e-15) break;
    x = 1.0 / rem;
  }
  if (q1 == 0) throw PreconditionError("Rational::from_double: no convergent found");
  Rational r(p1, q1);
  if (std::abs(r.to_double() - value) > tol * std::max(1.0, std::abs(value))) {
    throw PreconditionError("Rational::from_double: value is not close to a small rational");
  }
  return r;
}

std::string Rational::to_fraction_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string() const {
  // Denominator 2^a*5^b => exact finite decimal with a max(a,b)-digit tail.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", to_double());
    return buf;
  }
  const int digits = twos > fives ? twos : fives;
  // Scale numerator to 10^digits / den.
  __int128 scaled = num_;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= den_;
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s;
  if (scaled == 0) s = "0";
  while (scaled > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (neg) s.insert(s.begin(), '-');
  return s;
}

std::string Rational::to_annotated_string() const {
  return to_decimal_string() + " (" + to_fraction_string() + ")";
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw PreconditionError("Rational: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace pdm
