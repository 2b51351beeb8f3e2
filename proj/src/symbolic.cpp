#include "carpets/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "carpets/dimensions.hpp"
#include "carpets/errors.hpp"

namespace carpets {

namespace {

ClassificationReport classify_or_throw(const DiagonalIFS &ifs) {
  const ClassificationReport rep = validate_and_classify(ifs);
  if (rep.kind == CarpetKind::Neither)
    throw WrongKind("operation requires a Gatzouras-Lalley or Baranski carpet");
  return rep;
}

// Axis whose contraction dominates at the prefix γ|k (ties favour axis 1,
// matching the GL convention).
int dominant_axis(long double ctr1, long double ctr2) { return ctr1 >= ctr2 ? 1 : 2; }

// Axis-1 projected interval of a finite word.
void word_interval(const DiagonalIFS &ifs, const Word &w, double &lo, double &len) {
  lo = 0.0;
  len = 1.0;
  for (int l : w.letters) {
    lo += len * ifs.dx(l);
    len *= ifs.a(l);
  }
}

// Per-position allowed letter set of an approximate square (full alphabet
// beyond the constrained range).
std::vector<int> allowed_letters(const DiagonalIFS &ifs, const ColumnStructure &cs,
                                 const ApproximateSquare &q, int t) {
  if (t < q.i.size())
    return {q.i[t]};
  const int u = t - q.i.size();
  if (u < int(q.uj.size()))
    return cs.classes[std::size_t(q.uj[std::size_t(u)])];
  std::vector<int> all(std::size_t(ifs.size()));
  for (int i = 0; i < ifs.size(); ++i)
    all[std::size_t(i)] = i;
  return all;
}

} // namespace

double word_exponent(const DiagonalIFS &ifs, int axis, const Word &w) {
  if (w.empty())
    throw DomainError("word_exponent needs a nonempty word");
  SequenceSpec levels = SequenceSpec::periodic(Word{}, w);
  const NonAutoFibre fibre = fibre_from_carpet(ifs, axis, levels);
  return theta(fibre, 0, w.size());
}

long long L_index(const DiagonalIFS &ifs, const SequenceSpec &gamma, int k) {
  classify_or_throw(ifs);
  validate_letters(gamma, ifs);
  if (k < 1)
    throw DomainError("L_index needs k >= 1");
  long double ctr1 = 1.0L, ctr2 = 1.0L;
  for (int t = 0; t < k; ++t) {
    ctr1 *= (long double)ifs.a(gamma.letter(t));
    ctr2 *= (long double)ifs.b(gamma.letter(t));
  }
  const int j = dominant_axis(ctr1, ctr2);
  const long double threshold = j == 1 ? ctr2 : ctr1;
  // Scale-invariant scan: multiply the dominant-axis product until it drops
  // strictly below the other axis' product at level k.
  long double prod = j == 1 ? ctr1 : ctr2;
  long long L = k;
  while (prod >= threshold) {
    const int letter = gamma.letter(L);
    prod *= (long double)(j == 1 ? ifs.a(letter) : ifs.b(letter));
    ++L;
    if (L - k > 1000000)
      throw BudgetExceeded("L_index scan exceeded 1e6 levels");
  }
  return L;
}

ApproximateSquare approximate_square(const DiagonalIFS &ifs, const SequenceSpec &gamma, int k) {
  const long long L = L_index(ifs, gamma, k);
  ApproximateSquare q;
  q.i = gamma.prefix(k);
  long double ctr1 = 1.0L, ctr2 = 1.0L;
  for (int t = 0; t < k; ++t) {
    ctr1 *= (long double)ifs.a(gamma.letter(t));
    ctr2 *= (long double)ifs.b(gamma.letter(t));
  }
  q.axis = dominant_axis(ctr1, ctr2);
  q.rho = double(q.axis == 1 ? ctr2 : ctr1);
  const ColumnStructure cs = column_structure(ifs, q.axis);
  for (long long t = k; t < L; ++t)
    q.uj.push_back(cs.class_of(gamma.letter(t)));
  return q;
}

PseudoCylinderShape classify_pseudo_cylinder(const DiagonalIFS &ifs, const PseudoCylinder &pc) {
  classify_or_throw(ifs);
  const ColumnStructure cs = column_structure(ifs, pc.axis);
  const int jp = 3 - pc.axis;
  long double prod = 1.0L, other = 1.0L;
  for (int l : pc.i.letters) {
    prod *= (long double)ifs.ratio(l, pc.axis);
    other *= (long double)ifs.ratio(l, jp);
  }
  for (int c : pc.uj) {
    if (c < 0 || c >= int(cs.classes.size()))
      throw ValidationError("pseudo-cylinder class outside the column structure");
    prod *= (long double)cs.class_ratio[std::size_t(c)];
  }
  // Wide exactly when the projected word has not yet crossed the other-axis
  // scale of the stem, i.e. the pseudo-cylinder still contains an
  // approximate square on the same stem.
  return prod >= other ? PseudoCylinderShape::Wide : PseudoCylinderShape::Tall;
}

Section section_at_scale(const DiagonalIFS &ifs, double r, std::int64_t budget) {
  classify_or_throw(ifs);
  if (!(r > 0.0 && r < 1.0))
    throw DomainError("section scale must lie in (0,1)");
  Section sec;
  std::int64_t nodes = 0;
  auto spend = [&](std::int64_t n = 1) {
    nodes += n;
    if (nodes > budget)
      throw BudgetExceeded("section_at_scale exceeded the node budget");
  };

  // Enumerate the approximate squares below a fixed stem: extend class words
  // on the dominant axis until the crossing scale.
  std::function<void(const Word &, long double, long double, std::vector<int> &, int,
                     const ColumnStructure &)>
      squares = [&](const Word &stem, long double prod, long double threshold,
                    std::vector<int> &u, int axis, const ColumnStructure &cs) {
        for (std::size_t c = 0; c < cs.classes.size(); ++c) {
          spend();
          const long double next = prod * (long double)cs.class_ratio[c];
          u.push_back(int(c));
          if (next < threshold) {
            ApproximateSquare q;
            q.i = stem;
            q.uj = u;
            q.axis = axis;
            q.rho = double(threshold);
            sec.members.push_back(q);
          } else {
            squares(stem, next, threshold, u, axis, cs);
          }
          u.pop_back();
        }
      };

  const ColumnStructure cs1 = column_structure(ifs, 1);
  const ColumnStructure cs2 = column_structure(ifs, 2);
  std::function<void(Word &, long double, long double)> stems = [&](Word &w, long double ctr1,
                                                                    long double ctr2) {
    const long double rho = std::min(ctr1, ctr2);
    if (rho <= (long double)r) {
      const int axis = dominant_axis(ctr1, ctr2);
      std::vector<int> u;
      squares(w, axis == 1 ? ctr1 : ctr2, rho, u, axis, axis == 1 ? cs1 : cs2);
      return;
    }
    for (int l = 0; l < ifs.size(); ++l) {
      spend();
      w.letters.push_back(l);
      stems(w, ctr1 * (long double)ifs.a(l), ctr2 * (long double)ifs.b(l));
      w.letters.pop_back();
    }
  };
  Word root;
  stems(root, 1.0L, 1.0L);
  sec.complete = true;
  return sec;
}

long long squares_in_cylinder(const DiagonalIFS &ifs, const Word &i, double r,
                              std::int64_t budget) {
  long double bi = 1.0L;
  for (int l : i.letters) {
    if (l < 0 || l >= ifs.size())
      throw ValidationError("cylinder word outside the alphabet");
    bi *= (long double)ifs.b(l);
  }
  if ((long double)r > bi && !i.empty())
    throw DomainError("squares_in_cylinder needs r <= b_i");
  const Section sec = section_at_scale(ifs, r, budget);
  const ColumnStructure cs1 = column_structure(ifs, 1);
  const ColumnStructure cs2 = column_structure(ifs, 2);
  long long count = 0;
  for (const auto &q : sec.members) {
    // Q ⊆ [i]: every position below |i| must be forced to the letter of i.
    bool inside = true;
    const ColumnStructure &cs = q.axis == 1 ? cs1 : cs2;
    for (int t = 0; t < i.size() && inside; ++t) {
      const std::vector<int> al = allowed_letters(ifs, cs, q, t);
      inside = al.size() == 1 && al[0] == i[t];
    }
    if (inside)
      ++count;
  }
  return count;
}

double gamma_ratio(const DiagonalIFS &ifs, const SequenceSpec &gamma, int k) {
  classify_or_throw(ifs);
  validate_letters(gamma, ifs);
  if (k < 1)
    throw DomainError("gamma_ratio needs k >= 1");
  std::vector<double> xi(std::size_t(ifs.size()), 0.0);
  for (int t = 0; t < k; ++t)
    xi[std::size_t(gamma.letter(t))] += 1.0 / double(k);
  return lyapunov(ifs, 1, xi) / lyapunov(ifs, 2, xi);
}

OmegaClass omega_class(const DiagonalIFS &ifs, const SequenceSpec &gamma) {
  classify_or_throw(ifs);
  validate_letters(gamma, ifs);
  const std::vector<double> xi = gamma.frequencies(ifs.size());
  const double chi1 = lyapunov(ifs, 1, xi);
  const double chi2 = lyapunov(ifs, 2, xi);
  if (std::abs(chi1 - chi2) <= 1e-12)
    return OmegaClass::Omega0;
  return chi1 < chi2 ? OmegaClass::Omega1 : OmegaClass::Omega2;
}

Regularity is_regular_point(const DiagonalIFS &ifs, const SequenceSpec &gamma) {
  const ClassificationReport rep = validate_and_classify(ifs);
  if (rep.kind != CarpetKind::GatzourasLalley)
    throw WrongKind("is_regular_point requires a Gatzouras-Lalley carpet");
  validate_letters(gamma, ifs);
  if (rep.proj_ssc_axis1)
    return Regularity::Yes;
  // Interior-word certificate: γ is a concatenation of fixed-length blocks
  // whose projected intervals are strictly interior to (0,1).
  auto interior = [&](const Word &w) {
    double lo, len;
    word_interval(ifs, w, lo, len);
    return lo > 0.0 && lo + len < 1.0;
  };
  const int blk = gamma.period.size();
  if (gamma.preperiod.size() % blk == 0 && interior(gamma.period)) {
    bool ok = true;
    for (int s = 0; s < gamma.preperiod.size(); s += blk) {
      Word chunk;
      for (int t = s; t < s + blk; ++t)
        chunk.letters.push_back(gamma.preperiod[t]);
      if (!interior(chunk)) {
        ok = false;
        break;
      }
    }
    if (ok)
      return Regularity::YesByInteriorWords;
  }
  return Regularity::Unknown;
}

std::vector<Word> interior_words(const DiagonalIFS &ifs, int n, std::int64_t budget) {
  const ClassificationReport rep = validate_and_classify(ifs);
  if (rep.kind != CarpetKind::GatzourasLalley)
    throw WrongKind("interior_words requires a Gatzouras-Lalley carpet");
  if (n < 1)
    throw DomainError("interior_words needs n >= 1");
  double total = 1.0;
  for (int t = 0; t < n; ++t)
    total *= double(ifs.size());
  if (total > double(budget))
    throw BudgetExceeded("interior_words enumeration exceeds the budget");
  std::vector<Word> out;
  Word w;
  std::function<void(int, double, double)> rec = [&](int depth, double lo, double len) {
    if (depth == n) {
      if (lo > 0.0 && lo + len < 1.0)
        out.push_back(w);
      return;
    }
    for (int l = 0; l < ifs.size(); ++l) {
      w.letters.push_back(l);
      rec(depth + 1, lo + len * ifs.dx(l), len * ifs.a(l));
      w.letters.pop_back();
    }
  };
  rec(0, 0.0, 1.0);
  return out;
}

PointwiseResult pointwise_assouad(const DiagonalIFS &ifs, const SequenceSpec &gamma, int m_max) {
  const ClassificationReport rep = classify_or_throw(ifs);
  validate_letters(gamma, ifs);
  PointwiseResult out;
  if (rep.kind == CarpetKind::GatzourasLalley) {
    out.axis = 1;
    out.regularity = is_regular_point(ifs, gamma);
  } else {
    const OmegaClass oc = omega_class(ifs, gamma);
    if (oc == OmegaClass::Omega0)
      throw UnsupportedSpec(
          "pointwise Assouad dimension is only available for uniformly contracting "
          "(Omega_1 or Omega_2) sequences on Baranski carpets");
    out.axis = oc == OmegaClass::Omega1 ? 1 : 2;
    out.regularity = rep.proj_ssc(out.axis) ? Regularity::Yes : Regularity::Unknown;
  }
  const NonAutoFibre fibre = fibre_from_carpet(ifs, out.axis, gamma);
  const FibreAssouad fa = fibre_assouad(fibre, m_max);
  const ColumnStructure cs = column_structure(ifs, out.axis);
  const double Bproj = moran_dimension(cs.class_ratio);
  const double dimB = box_dimension(ifs);
  out.value = std::max(dimB, Bproj + fa.estimate);
  out.error_bound = fa.error_bound;
  out.lower_bound_only = out.regularity == Regularity::Unknown;
  return out;
}

TangentDim max_tangent_dim(const DiagonalIFS &ifs, const SequenceSpec &gamma, int m_max) {
  const ClassificationReport rep = classify_or_throw(ifs);
  validate_letters(gamma, ifs);
  int axis = 1;
  if (rep.kind == CarpetKind::Baranski) {
    const OmegaClass oc = omega_class(ifs, gamma);
    if (oc == OmegaClass::Omega0)
      throw UnsupportedSpec("max_tangent_dim needs an Omega_1 or Omega_2 sequence");
    axis = oc == OmegaClass::Omega1 ? 1 : 2;
  }
  const NonAutoFibre fibre = fibre_from_carpet(ifs, axis, gamma);
  const FibreAssouad fa = fibre_assouad(fibre, m_max);
  const ColumnStructure cs = column_structure(ifs, axis);
  TangentDim out;
  out.value = moran_dimension(cs.class_ratio) + fa.estimate;
  out.error_bound = fa.error_bound;
  return out;
}

SequenceSpec sequence_for_target(const DiagonalIFS &ifs, double alpha, int depth) {
  const ClassificationReport rep = validate_and_classify(ifs);
  if (rep.kind != CarpetKind::GatzourasLalley)
    throw WrongKind("sequence_for_target requires a Gatzouras-Lalley carpet");
  const GlBoxDims box = gl_box_dims(ifs);
  const GlAssouadLower al = gl_assouad_lower(ifs);
  const double Bproj = box.dim_B_proj;
  if (alpha < box.dim_B - 1e-9 || alpha > al.dim_A + 1e-9)
    throw OutOfRange("target dimension must lie in [dim_B, dim_A]");

  const ColumnStructure cs = column_structure(ifs, 1);
  // Pick a representative letter per extreme column, preferring letters whose
  // projected interval is strictly interior (keeps the emitted sequence
  // regular-certifiable when possible).
  auto pick_letter = [&](std::size_t cls) {
    for (int l : cs.classes[cls]) {
      double lo, len;
      word_interval(ifs, Word{{l}}, lo, len);
      if (lo > 0.0 && lo + len < 1.0)
        return l;
    }
    return cs.classes[cls][0];
  };
  std::size_t max_cls = 0, min_cls = 0;
  for (std::size_t c = 1; c < al.t.size(); ++c) {
    if (al.t[c] > al.t[max_cls])
      max_cls = c;
    if (al.t[c] < al.t[min_cls])
      min_cls = c;
  }
  const int letter_hi = pick_letter(max_cls);
  const int letter_lo = pick_letter(min_cls);

  if (alpha >= al.dim_A - 1e-9)
    return SequenceSpec::constant(letter_hi); // constant-word shortcut
  if (al.dim_A - al.dim_L <= 1e-9)
    throw Degenerate("dim_L equals dim_A: no intermediate targets exist");

  const double target = alpha - Bproj;
  const double t_hi = al.t[max_cls], t_lo = al.t[min_cls];
  if (target <= t_lo + 1e-9)
    return SequenceSpec::constant(letter_lo);

  auto t_of = [&](const Word &w) { return word_exponent(ifs, 1, w); };
  Word A = repeat_word(Word{{letter_hi}}, 4);
  Word L = repeat_word(Word{{letter_lo}}, 4);
  constexpr int kMaxLen = 20000;

  for (int round = 1; round <= depth; ++round) {
    const double band = std::max(0.002, (t_hi - t_lo) * std::pow(2.0, -(round + 2)));
    // New upper word: L^m A^n with the least n making t ≥ target; raise m
    // until the overshoot fits inside the band.
    Word newA;
    bool gotA = false;
    for (int m = 1; m <= 256 && !gotA; m *= 2) {
      const Word base = repeat_word(L, m);
      int lo = 1, hi = 1;
      while (hi <= 512 && t_of(base + repeat_word(A, hi)) < target)
        hi *= 2;
      if (hi > 512)
        continue;
      while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (t_of(base + repeat_word(A, mid)) >= target)
          hi = mid;
        else
          lo = mid + 1;
      }
      Word cand = base + repeat_word(A, lo);
      if (cand.size() <= kMaxLen && t_of(cand) - target <= band) {
        newA = std::move(cand);
        gotA = true;
      }
    }
    // New lower word: L^m A^n with the greatest n keeping t ≤ target; raise m
    // until the undershoot fits inside the band.
    Word newL;
    bool gotL = false;
    for (int m = 1; m <= 256 && !gotL; m *= 2) {
      const Word base = repeat_word(L, m);
      int hi = 0;
      while (hi < 512 && t_of(base + repeat_word(A, hi + 1)) <= target)
        hi = hi == 0 ? 1 : hi * 2;
      int best = 0;
      // binary search the largest feasible n in [0, hi]
      int a = 0, b = std::min(hi, 512);
      while (a <= b) {
        const int mid = (a + b) / 2;
        if (mid == 0 || t_of(base + repeat_word(A, mid)) <= target) {
          best = mid;
          a = mid + 1;
        } else {
          b = mid - 1;
        }
      }
      Word cand = base + repeat_word(A, best);
      if (cand.size() <= kMaxLen && target - t_of(cand) <= band) {
        newL = std::move(cand);
        gotL = true;
      }
    }
    if (!gotA || !gotL)
      break; // keep the last completed round
    A = std::move(newA);
    L = std::move(newL);
  }
  return SequenceSpec::periodic(Word{}, L);
}

bool squares_intersect(const DiagonalIFS &ifs, const ApproximateSquare &q1,
                       const ApproximateSquare &q2) {
  const ColumnStructure cs1 = column_structure(ifs, q1.axis);
  const ColumnStructure cs2 = column_structure(ifs, q2.axis);
  const int len = std::max(q1.i.size() + int(q1.uj.size()), q2.i.size() + int(q2.uj.size()));
  for (int t = 0; t < len; ++t) {
    const std::vector<int> a1 = allowed_letters(ifs, cs1, q1, t);
    const std::vector<int> a2 = allowed_letters(ifs, cs2, q2, t);
    const std::set<int> s1(a1.begin(), a1.end());
    bool hit = false;
    for (int l : a2)
      if (s1.count(l)) {
        hit = true;
        break;
      }
    if (!hit)
      return false;
  }
  return true;
}

bool square_contains(const DiagonalIFS &ifs, const ApproximateSquare &outer,
                     const ApproximateSquare &inner) {
  const ColumnStructure cso = column_structure(ifs, outer.axis);
  const ColumnStructure csi = column_structure(ifs, inner.axis);
  const int len = outer.i.size() + int(outer.uj.size());
  for (int t = 0; t < len; ++t) {
    const std::vector<int> ao = allowed_letters(ifs, cso, outer, t);
    const std::vector<int> ai = allowed_letters(ifs, csi, inner, t);
    const std::set<int> so(ao.begin(), ao.end());
    for (int l : ai)
      if (!so.count(l))
        return false;
  }
  return true;
}

} // namespace carpets
