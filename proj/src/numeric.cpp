#include "carpets/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "carpets/errors.hpp"

namespace carpets {

RootResult solve_decreasing(const std::function<double(double)> &f, double lo, double hi,
                            double tol, const std::function<double(double)> &df) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo < -tol)
    throw NoSolution("solve_decreasing: f(lo) < 0, no root in bracket");
  if (flo <= 0.0)
    return {lo, flo, lo, hi, 0};
  // Extend the bracket until the function changes sign.
  int iters = 0;
  while (fhi > 0.0) {
    lo = hi;
    flo = fhi;
    hi *= 2.0;
    fhi = f(hi);
    if (++iters > 80)
      throw NoSolution("solve_decreasing: no sign change found");
  }
  RootResult r;
  double x = 0.5 * (lo + hi);
  for (; iters < 300; ++iters) {
    double fx = f(x);
    if (fx > 0.0)
      lo = x;
    else
      hi = x;
    if (std::abs(fx) <= tol && (hi - lo) <= tol * std::max(1.0, std::abs(x))) {
      r.x = x;
      r.residual = fx;
      break;
    }
    double next = 0.5 * (lo + hi);
    if (df) {
      // Newton step from the current point, accepted only inside the bracket.
      const double d = df(x);
      if (d != 0.0) {
        const double xn = x - fx / d;
        if (xn > lo && xn < hi)
          next = xn;
      }
    }
    x = next;
    r.x = x;
    r.residual = fx;
  }
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.iterations = iters;
  r.residual = f(r.x);
  return r;
}

LineFit ols_fit(const std::vector<double> &x, const std::vector<double> &y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n)
    throw DomainError("ols_fit needs at least two matching points");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / double(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / double(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0)
    throw DomainError("ols_fit: degenerate abscissae");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = y[i] - (fit.intercept + fit.slope * x[i]);
      sse += e * e;
    }
    const double se = std::sqrt(sse / double(n - 2) / sxx);
    // two-sided 97.5% Student-t quantiles for small dof
    static const double t975[] = {0,     12.71, 4.303, 3.182, 2.776, 2.571,
                                  2.447, 2.365, 2.306, 2.262, 2.228};
    const std::size_t dof = n - 2;
    const double t = dof < 11 ? t975[dof] : 2.0;
    fit.slope_ci = t * se;
  }
  return fit;
}

double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

std::vector<double> project_to_simplex(std::vector<double> v) {
  // Euclidean projection onto {p >= 0, sum p = 1} (sort-based algorithm).
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  int rho = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    const double t = (css - 1.0) / double(i + 1);
    if (u[i] - t > 0.0) {
      rho = int(i + 1);
      theta = t;
    }
  }
  (void)rho;
  for (auto &x : v)
    x = std::max(0.0, x - theta);
  return v;
}

} // namespace carpets
