#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "pdm/errors.hpp"

namespace pdm {

/// Exact rational number on int64 numerator/denominator, always normalized
/// (gcd 1, denominator > 0). Used wherever a sign test must be exact rather
/// than a floating-point comparison against zero.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(std::int64_t integer) : num_(integer) {}  // NOLINT(google-explicit-constructor)

  /// Nearest rational with denominator <= max_den (continued fractions).
  /// Throws PreconditionError when no such rational is within tol of value.
  static Rational from_double(double value, std::int64_t max_den = 1'000'000,
                              double tol = 1e-9);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] double to_double() const;
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }

  /// "5/16", "-1/2", "3" (integers drop the denominator).
  [[nodiscard]] std::string to_fraction_string() const;
  /// Exact decimal expansion when the denominator is 2^a*5^b ("0.3125"),
  /// otherwise a 17-significant-digit approximation.
  [[nodiscard]] std::string to_decimal_string() const;
  /// "0.3125 (5/16)" — decimal plus exact fraction.
  [[nodiscard]] std::string to_annotated_string() const;

  Rational operator-() const { return {-num_, den_}; }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  void normalize();
};

}  // namespace pdm
