#pragma once

#include <cstdint>
#include <vector>

#include "carpets/carpet.hpp"
#include "carpets/fibre.hpp"
#include "carpets/sequence.hpp"

namespace carpets {

// Union of cylinders extending stem `i` whose η_axis-projections follow the
// class word `uj`.
struct PseudoCylinder {
  Word i;
  std::vector<int> uj; // class indices on `axis`
  int axis = 1;
};

// Pseudo-cylinder whose image rectangle has comparable sides: the projected
// word runs to the crossing depth L_k. rho is the diameter surrogate
// ctr_{i,j'} (= b_i for GL squares with axis 1).
struct ApproximateSquare {
  Word i;
  std::vector<int> uj;
  int axis = 1;
  double rho = 0.0;
};

enum class PseudoCylinderShape { Wide, Tall };
enum class Regularity { Yes, YesByInteriorWords, Unknown };
enum class OmegaClass { Omega0, Omega1, Omega2 };

struct Section {
  std::vector<ApproximateSquare> members;
  bool complete = false;
};

constexpr std::int64_t kDefaultBudget = 10000000; // 1e7 enumeration nodes

// Minimal L with ctr_{γ|L, j} < ctr_{γ|k, j'}, where j is the axis whose
// ratio dominates at γ|k (always 1 for GL).
long long L_index(const DiagonalIFS &ifs, const SequenceSpec &gamma, int k);

ApproximateSquare approximate_square(const DiagonalIFS &ifs, const SequenceSpec &gamma, int k);

PseudoCylinderShape classify_pseudo_cylinder(const DiagonalIFS &ifs, const PseudoCylinder &pc);

// Complete section 𝒮(r) of approximate squares at scale r.
Section section_at_scale(const DiagonalIFS &ifs, double r,
                         std::int64_t budget = kDefaultBudget);

// Exact count of {Q ∈ 𝒮(r) : Q ⊆ [i]}.
long long squares_in_cylinder(const DiagonalIFS &ifs, const Word &i, double r,
                              std::int64_t budget = kDefaultBudget);

// Γ_k(γ) = χ₁(ξ_k)/χ₂(ξ_k) for the empirical letter distribution of γ|k, and
// the Ω-partition by its limit.
double gamma_ratio(const DiagonalIFS &ifs, const SequenceSpec &gamma, int k);
OmegaClass omega_class(const DiagonalIFS &ifs, const SequenceSpec &gamma);

Regularity is_regular_point(const DiagonalIFS &ifs, const SequenceSpec &gamma);

// All words of length n whose axis-1 projected interval is strictly inside
// (0,1).
std::vector<Word> interior_words(const DiagonalIFS &ifs, int n,
                                 std::int64_t budget = kDefaultBudget);

struct PointwiseResult {
  double value = 0.0;
  double error_bound = 0.0;
  Regularity regularity = Regularity::Unknown;
  bool lower_bound_only = false;
  int axis = 1; // projection direction used for the fibre
};
PointwiseResult pointwise_assouad(const DiagonalIFS &ifs, const SequenceSpec &gamma, int m_max);

struct TangentDim {
  double value = 0.0;
  double error_bound = 0.0;
};
TangentDim max_tangent_dim(const DiagonalIFS &ifs, const SequenceSpec &gamma, int m_max);

// Connector-word construction: a sequence whose pointwise Assouad dimension
// approaches α as the refinement depth grows.
SequenceSpec sequence_for_target(const DiagonalIFS &ifs, double alpha, int depth);

// t(w): Moran exponent of the column word induced by the letter word w,
// evaluated as θ on the induced fibre (single code path).
double word_exponent(const DiagonalIFS &ifs, int axis, const Word &w);

// Symbolic-set predicates used by the test suites. Constraints of a
// pseudo-cylinder are per-position letter sets, so intersection/containment
// reduce to positionwise set comparisons.
bool squares_intersect(const DiagonalIFS &ifs, const ApproximateSquare &q1,
                       const ApproximateSquare &q2);
bool square_contains(const DiagonalIFS &ifs, const ApproximateSquare &outer,
                     const ApproximateSquare &inner);

} // namespace carpets
