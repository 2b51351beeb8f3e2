#pragma once

#include <string>
#include <vector>

#include "carpets/carpet.hpp"
#include "carpets/numeric.hpp"

namespace carpets {

// Diagnostics for one solved implicit equation, kept in reports.
struct EquationDiagnostics {
  std::string label;
  double value = 0.0;
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

struct DimensionReport {
  CarpetKind kind = CarpetKind::Neither;
  double dim_H = 0.0, dim_B = 0.0, dim_A = 0.0, dim_L = 0.0;
  // dim_B of the axis-1 / axis-2 projections (index 0 = axis 1).
  double dim_B_proj[2] = {0.0, 0.0};
  // Per-class slice exponents t_j(ℓ), per axis.
  std::vector<double> t_class[2];
  std::vector<double> optimizer_p;
  // Barański extras: per-direction Hausdorff values, per-direction Assouad
  // candidates dim_B η_j + max_ℓ t_j(ℓ), and the reduced-profile boundary p₀
  // when the instance has the two-block symmetry.
  double d_direction[2] = {-1.0, -1.0};
  double assouad_candidate[2] = {0.0, 0.0};
  std::vector<double> optimizer_p_direction[2];
  double p0 = -1.0;
  std::vector<EquationDiagnostics> equations;
};

// Unique s >= 0 with sum r_i^s = 1, by bisection plus Newton polish.
double moran_dimension(const std::vector<double> &ratios, double tol = 1e-12);
RootResult moran_dimension_detail(const std::vector<double> &ratios, double tol = 1e-12);

// Box dimensions of a GL carpet: the projected Moran equation, then the
// nested equation sum a_i^{sB} b_i^{s - sB} = 1.
struct GlBoxDims {
  double dim_B_proj = 0.0;
  double dim_B = 0.0;
  EquationDiagnostics proj_eq, box_eq;
};
GlBoxDims gl_box_dims(const DiagonalIFS &ifs);

struct HausdorffResult {
  double value = 0.0;
  std::vector<double> p_star;
  double grad_norm = 0.0;
  int converged_restarts = 0;
};
// Maximizes s(p) = H(η p)/χ₁ + (H(p) − H(η p))/χ₂ over the open simplex by
// projected-gradient ascent from 16 random starts plus the uniform start.
HausdorffResult gl_hausdorff(const DiagonalIFS &ifs, double tol = 1e-9);

struct GlAssouadLower {
  double dim_A = 0.0;
  double dim_L = 0.0;
  std::vector<double> t; // per axis-1 class
};
GlAssouadLower gl_assouad_lower(const DiagonalIFS &ifs);

// Full report for a Barański (or GL, delegating) carpet.
DimensionReport baranski_dims(const DiagonalIFS &ifs, double tol = 1e-9);

// Box dimension alone (no simplex optimization): GL nested equations, or the
// per-direction maximum for a general Barański carpet.
double box_dimension(const DiagonalIFS &ifs);

// Reduced two-block family (the 12-map instance): D_j(p) profile values and
// the boundary p₀ between the direction-1 and direction-2 regimes.
struct ReducedProfile {
  double alpha1 = 0.0, alpha2 = 0.0, beta = 0.0;
  double p0 = 0.0;
};
ReducedProfile extract_reduced_profile(const DiagonalIFS &ifs);
double baranski_profile_D(const DiagonalIFS &ifs_reduced, int j, double p);
// Maximum of D_j over [0,1] with its argmax (golden-section refined grid).
struct ProfileMax {
  double value = 0.0;
  double argmax = 0.0;
};
ProfileMax baranski_profile_sup(const DiagonalIFS &ifs_reduced, int j);

// Shared entropy/Lyapunov functionals on probability vectors.
double entropy(const std::vector<double> &p);
double projected_entropy(const DiagonalIFS &ifs, int axis, const std::vector<double> &p);
double lyapunov(const DiagonalIFS &ifs, int axis, const std::vector<double> &p);

} // namespace carpets
