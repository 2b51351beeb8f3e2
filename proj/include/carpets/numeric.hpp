#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace carpets {

// Result of a bracketed scalar solve, kept for solver diagnostics in reports.
struct RootResult {
  double x = 0.0;
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

// Finds the root of a strictly decreasing function on [lo, hi] by bisection,
// polished by a few Newton steps when a derivative is supplied. The bracket
// is guaranteed to shrink; Newton only ever replaces the midpoint when its
// step stays inside the current bracket.
RootResult solve_decreasing(const std::function<double(double)> &f, double lo, double hi,
                            double tol,
                            const std::function<double(double)> &df = nullptr);

// Ordinary least squares fit y = intercept + slope*x, with the half-width of
// the 95% confidence interval for the slope (Student-t, n-2 dof).
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_ci = 0.0; // 95% CI half-width
};

LineFit ols_fit(const std::vector<double> &x, const std::vector<double> &y);

// Natural-log entropy term with the 0·log 0 = 0 convention.
double xlogx(double p);

// Euclidean projection of an arbitrary vector onto the probability simplex.
std::vector<double> project_to_simplex(std::vector<double> v);

} // namespace carpets
