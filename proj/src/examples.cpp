#include "carpets/examples.hpp"

#include "carpets/errors.hpp"

namespace carpets {

namespace {

Number frac(std::int64_t n, std::int64_t d) { return Number(Rational(n, d)); }

// Adapter so the layout template can run on plain doubles: T(p,q) = p/q.
struct D {
  double v;
  explicit D(double x) : v(x) {}
  D(std::int64_t p, std::int64_t q) : v(double(p) / double(q)) {}
  friend D operator-(D a, D b) { return D(a.v - b.v); }
  friend D operator+(D a, D b) { return D(a.v + b.v); }
  friend D operator*(D a, D b) { return D(a.v * b.v); }
};

Number to_number(const Rational &r) { return Number(r); }
Number to_number(D d) { return Number(d.v); }

// Shared layout code: all arithmetic runs in T = double-adapter or Rational.
template <class T> DiagonalIFS build_baranski(T delta) {
  const T one(1, 1);
  const T beta = one * T(1, 4) - delta;
  const T alpha1 = one * T(1, 3) - delta;
  const T alpha2 = one * T(1, 6) - delta;
  const T gx = (one - alpha1 - alpha2 - alpha2 - alpha2 - alpha2) * T(1, 4);
  const T gy = (one - beta - beta - beta - beta) * T(1, 3);

  // Column x-origins: the α₁ column then four α₂ columns with gap gx.
  T colx[5] = {T(0, 1), alpha1 + gx, T(0, 1), T(0, 1), T(0, 1)};
  for (int j = 2; j <= 4; ++j)
    colx[j] = colx[j - 1] + alpha2 + gx;
  T rowy[4] = {T(0, 1), T(0, 1), T(0, 1), T(0, 1)};
  for (int i = 1; i <= 3; ++i)
    rowy[i] = rowy[i - 1] + beta + gy;

  DiagonalIFS ifs;
  // Φ₁: the wide column, rows 0..3.
  for (int i = 0; i < 4; ++i)
    ifs.maps.push_back({to_number(alpha1), to_number(beta), to_number(colx[0]), to_number(rowy[i])});
  // Φ₂ᵃ: columns 1,2 × rows 0,1.
  for (int j = 1; j <= 2; ++j)
    for (int i = 0; i < 2; ++i)
      ifs.maps.push_back(
          {to_number(alpha2), to_number(beta), to_number(colx[j]), to_number(rowy[i])});
  // Φ₂ᵇ: columns 3,4 × rows 2,3.
  for (int j = 3; j <= 4; ++j)
    for (int i = 2; i < 4; ++i)
      ifs.maps.push_back(
          {to_number(alpha2), to_number(beta), to_number(colx[j]), to_number(rowy[i])});
  return ifs;
}

} // namespace

DiagonalIFS gl_example() {
  DiagonalIFS ifs;
  ifs.maps.push_back({frac(1, 2), frac(1, 4), frac(0, 1), frac(0, 1)});
  ifs.maps.push_back({frac(1, 2), frac(1, 4), frac(0, 1), frac(1, 2)});
  ifs.maps.push_back({frac(1, 4), frac(1, 8), frac(1, 2), frac(0, 1)});
  return ifs;
}

DiagonalIFS product_carpet() {
  DiagonalIFS ifs;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      ifs.maps.push_back({frac(1, 2), frac(1, 2), frac(i, 2), frac(j, 2)});
  return ifs;
}

DiagonalIFS baranski_example(double delta) {
  if (delta < 0.0 || delta >= 1.0 / 6.0)
    throw DomainError("delta must lie in [0, 1/6)");
  return build_baranski<D>(D(delta));
}

DiagonalIFS baranski_example(const Rational &delta) {
  if (delta.value() < 0.0 || delta.value() >= 1.0 / 6.0)
    throw DomainError("delta must lie in [0, 1/6)");
  return build_baranski<Rational>(delta);
}

} // namespace carpets
