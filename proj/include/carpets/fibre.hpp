#pragma once

#include <vector>

#include "carpets/carpet.hpp"
#include "carpets/numeric.hpp"
#include "carpets/sequence.hpp"

namespace carpets {

// Non-autonomous self-similar system on the line: level n applies the
// component IFS selected by the level sequence (a word over component
// indices, finitely described).
struct NonAutoFibre {
  std::vector<std::vector<double>> components;
  SequenceSpec levels;
  double r_min = 1.0;

  const std::vector<double> &component_at(long long n) const {
    return components[std::size_t(levels.letter(n))];
  }
};

NonAutoFibre make_fibre(std::vector<std::vector<double>> components, SequenceSpec levels);

// The symbolic fibre K_{η_axis(γ)} of a carpet: components are the η-classes
// on `axis`, each carrying the contraction ratios of the *other* axis, and
// the level sequence is γ pushed through the class map.
NonAutoFibre fibre_from_carpet(const DiagonalIFS &ifs, int axis, const SequenceSpec &gamma);

// θ(n,m): the unique solution of ∏_{k=n+1}^{n+m} S_k(θ) = 1 where
// S_k(θ) = Σ_j r_{k,j}^θ. Solved in log space on the per-level factorization.
double theta(const NonAutoFibre &fibre, long long n, int m, double tol = 1e-12);
RootResult theta_detail(const NonAutoFibre &fibre, long long n, int m, double tol = 1e-12);

// Oracle: the same exponent via explicit enumeration of all m-tuples.
double theta_bruteforce(const NonAutoFibre &fibre, long long n, int m, double tol = 1e-12);

struct FibreAssouad {
  double estimate = 0.0;
  double error_bound = 0.0;
  double fitted_C = 0.0; // empirical continuity constant from property (ii)
  int windows = 0;
};
// sup_n θ(n, m_max) over the finitely many distinct windows the sequence can
// produce, with an empirically fitted error bound.
FibreAssouad fibre_assouad(const NonAutoFibre &fibre, int m_max);

struct ThetaTriple {
  long long n;
  int m, k;
};
struct PropertyReport {
  int samples = 0;
  int submax_violations = 0;
  double worst_excess = 0.0;  // largest θ(n,m+k) − max{θ(n,m), θ(n+m,k)}
  double continuity_C = 0.0;  // smallest admissible C over the samples
};
PropertyReport check_theta_properties(const NonAutoFibre &fibre,
                                      const std::vector<ThetaTriple> &samples);

} // namespace carpets
