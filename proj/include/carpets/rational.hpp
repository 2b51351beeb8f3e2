#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "carpets/errors.hpp"

namespace carpets {

// Minimal exact rational on 64-bit integers. Carpet data are small fixed
// fractions, so no bignum is needed; construction normalizes sign and gcd.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0)
      throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num == b.num && a.den == b.den;
  }
  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.num * b.den < b.num * a.den;
  }
};

// A number that remembers whether it came from an exact "p/q" literal.
// Exactness propagates into column-identity and Γ=1 comparisons.
struct Number {
  double value = 0.0;
  std::optional<Rational> exact;

  Number() = default;
  Number(double v) : value(v) {}
  Number(const Rational &r) : value(r.value()), exact(r) {}

  // Structural equality: exact when both sides are exact, 1e-12 otherwise.
  bool same(const Number &o) const {
    if (exact && o.exact)
      return *exact == *o.exact;
    return std::abs(value - o.value) <= 1e-12;
  }
};

// Parses "p/q" (or a plain integer string) into a rational.
inline Rational parse_fraction(const std::string &s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(std::stoll(s), 1);
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception &) {
    throw ValidationError("cannot parse fraction: " + s);
  }
}

} // namespace carpets
