// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Tolerances and runtime budgets are pinned in code.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "carpets/dimensions.hpp"
#include "carpets/examples.hpp"
#include "carpets/fibre.hpp"
#include "carpets/numeric.hpp"
#include "carpets/oracle.hpp"
#include "carpets/symbolic.hpp"
#include "instances.hpp"

using namespace carpets;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

void report(int criterion, bool pass, const char *fmt, ...) {
  if (!pass)
    ++failures;
  std::printf("criterion %d: %s — ", criterion, pass ? "PASS" : "FAIL");
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
  std::fflush(stdout);
}

NonAutoFibre random_fibre(std::mt19937 &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int ncomp = 1 + int(rng() % 3);
  std::vector<std::vector<double>> comps;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<double> ratios;
    const int k = 1 + int(rng() % 3);
    for (int i = 0; i < k; ++i)
      ratios.push_back(0.1 + 0.5 * unit(rng) / double(k));
    comps.push_back(std::move(ratios));
  }
  Word pre, per;
  const int np = int(rng() % 3);
  for (int i = 0; i < np; ++i)
    pre.letters.push_back(int(rng() % std::size_t(ncomp)));
  const int pp = 1 + int(rng() % 4);
  for (int i = 0; i < pp; ++i)
    per.letters.push_back(int(rng() % std::size_t(ncomp)));
  return make_fibre(std::move(comps), SequenceSpec::periodic(pre, per));
}

void criterion_1() {
  const std::vector<double> ratios{1.0 / 3, 1.0 / 6, 1.0 / 6};
  moran_dimension(ratios); // warm-up outside the timed call
  Timer t;
  const double s = moran_dimension(ratios);
  const double ms = t.ms();
  const double err = std::abs(s - 0.72263);
  report(1, err <= 5e-5 && ms < 1.0, "moran s=%.6f, |err|=%.2e (tol 5e-5), %.3f ms (<1)",
         s, err, ms);
}

void criterion_2() {
  Timer t;
  const DiagonalIFS ifs = baranski_example(Rational(0, 1));
  const ReducedProfile prof = extract_reduced_profile(ifs);
  const ProfileMax d1 = baranski_profile_sup(ifs, 1);
  const ProfileMax d2 = baranski_profile_sup(ifs, 2);
  const double ms = t.ms();
  const bool sup1_ok = std::abs(d1.value - 0.489536) <= 1e-4;
  const bool sup2_ok = std::abs(d2.value - 0.529533) <= 1e-4;
  const bool argmax_ok = d2.argmax > prof.p0 && d2.argmax < 1.0;
  report(2, sup1_ok && sup2_ok && argmax_ok && ms < 1000.0,
         "sup D1=%.6f (quoted 0.489536%s), sup D2=%.6f (quoted 0.529533%s), "
         "D2 argmax %.5f in (p0=%.5f, 1): %s, %.0f ms (<1000)",
         d1.value, sup1_ok ? ", ok" : ", MISMATCH", d2.value,
         sup2_ok ? ", ok" : ", MISMATCH", d2.argmax, prof.p0, argmax_ok ? "yes" : "no",
         ms);
}

void criterion_3() {
  const DimensionReport rep = baranski_dims(baranski_example(Rational(1, 40)));
  const double gap_d = rep.d_direction[1] - rep.d_direction[0];
  const double gap_a = rep.assouad_candidate[0] - rep.assouad_candidate[1];
  report(3, gap_d > 1e-3 && gap_a > 1e-3,
         "d1=%.6f < d2=%.6f (margin %.2e), candidate1=%.6f > candidate2=%.6f "
         "(margin %.2e), both > 1e-3",
         rep.d_direction[0], rep.d_direction[1], gap_d, rep.assouad_candidate[0],
         rep.assouad_candidate[1], gap_a);
}

void criterion_4() {
  std::mt19937 rng(4242);
  int samples = 0, submax_bad = 0, brute_bad = 0;
  double worst_gap = 0.0;
  for (int inst = 0; inst < 5; ++inst) {
    const NonAutoFibre f = random_fibre(rng);
    for (int s = 0; s < 40; ++s) {
      const long long n = (long long)(rng() % 16);
      const int m = 1 + int(rng() % 8);
      const int k = 1 + int(rng() % 5);
      ++samples;
      const double whole = theta(f, n, m + k);
      if (whole - std::max(theta(f, n, m), theta(f, n + m, k)) > 1e-9)
        ++submax_bad;
      const double gap = std::abs(theta(f, n, m) - theta_bruteforce(f, n, m));
      worst_gap = std::max(worst_gap, gap);
      if (gap > 1e-10)
        ++brute_bad;
    }
  }
  report(4, submax_bad == 0 && brute_bad == 0,
         "%d samples: %d submaximality violations (>1e-9), %d brute-force "
         "mismatches (worst %.2e, tol 1e-10)",
         samples, submax_bad, brute_bad, worst_gap);
}

void criterion_5() {
  std::mt19937 rng(5150);
  int bad_order = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const DiagonalIFS ifs = trial < 100 ? test_instances::random_gl(rng)
                                        : test_instances::random_baranski(rng);
    const DimensionReport rep = baranski_dims(ifs);
    if (!(rep.dim_L <= rep.dim_H + 1e-9 && rep.dim_H <= rep.dim_B + 1e-9 &&
          rep.dim_B <= rep.dim_A + 1e-9))
      ++bad_order;
  }
  int bad_uniform = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const DimensionReport rep = baranski_dims(test_instances::random_uniform_gl(rng));
    if (std::abs(rep.dim_H - rep.dim_A) > 1e-9 || std::abs(rep.dim_L - rep.dim_A) > 1e-9 ||
        std::abs(rep.dim_B - rep.dim_A) > 1e-9)
      ++bad_uniform;
  }
  report(5, bad_order == 0 && bad_uniform == 0,
         "200 random instances: %d ordering violations (tol 1e-9); 20 uniform "
         "subsystems: %d with non-coinciding dimensions",
         bad_order, bad_uniform);
}

void criterion_6() {
  const DiagonalIFS ifs = test_instances::gl_ssc_example();
  const GlBoxDims box = gl_box_dims(ifs);
  const GlAssouadLower al = gl_assouad_lower(ifs);
  const ColumnStructure cs = column_structure(ifs, 1);
  bool ok = true;
  double worst = 0.0;
  for (std::size_t c = 0; c < cs.classes.size(); ++c) {
    const SequenceSpec gamma = SequenceSpec::constant(cs.classes[c][0]);
    const PointwiseResult res = pointwise_assouad(ifs, gamma, 64);
    // Independent Moran path for the column exponent.
    std::vector<double> bs;
    for (int i : cs.classes[c])
      bs.push_back(ifs.b(i));
    const double expect = std::max(box.dim_B, box.dim_B_proj + moran_dimension(bs));
    worst = std::max(worst, std::abs(res.value - expect));
    ok = ok && std::abs(res.value - expect) <= 1e-9;
    if (moran_dimension(bs) == *std::max_element(al.t.begin(), al.t.end()))
      ok = ok && std::abs(res.value - al.dim_A) <= 1e-9;
  }
  report(6, ok,
         "constant-column pointwise values match the independent Moran path "
         "(worst |diff| %.2e, tol 1e-9); max column attains dim_A",
         worst);
}

void criterion_7() {
  Timer t;
  const DiagonalIFS ifs = gl_example();
  std::vector<double> xs, ys;
  for (int k = 4; k <= 9; ++k) {
    const double delta = std::pow(2.0, -k);
    xs.push_back(std::log(1.0 / delta));
    ys.push_back(std::log(double(box_count(ifs, delta))));
  }
  const LineFit fit = ols_fit(xs, ys);
  const double dim = gl_box_dims(ifs).dim_B;
  const double ms = t.ms();
  report(7, std::abs(fit.slope - dim) < 0.05 && ms < 60000.0,
         "box-count slope %.5f vs dim_B %.5f (|diff| %.4f < 0.05), %.0f ms (<60000)",
         fit.slope, dim, std::abs(fit.slope - dim), ms);
}

void criterion_8() {
  Timer t;
  const DiagonalIFS ifs = gl_example();
  const SequenceSpec gamma = SequenceSpec::constant(0);
  const double resolution = 1.0 / 1024.0;
  std::vector<double> xs, ys, ds;
  for (int n = 2; n <= 6; ++n) {
    const PointCloud tan = tangent_approx(ifs, gamma, n, resolution);
    const PointCloud prod = product_approx(ifs, gamma, n, resolution);
    const double d = std::max(p_hausdorff(prod, tan), 1e-12);
    ds.push_back(d);
    xs.push_back(double(n));
    ys.push_back(std::log(d));
  }
  double kappa = 0.0;
  for (int i = 0; i < ifs.size(); ++i)
    kappa = std::max(kappa, ifs.b(i) / ifs.a(i));
  const LineFit fit = ols_fit(xs, ys);
  const double target = std::log(kappa);
  const double ms = t.ms();
  const bool decays = ds.front() > ds.back();
  const bool rate_ok = std::abs(fit.slope - target) <= 0.25 * std::abs(target);
  report(8, decays && rate_ok && ms < 120000.0,
         "one-sided distances n=2..6: %.2e %.2e %.2e %.2e %.2e; fitted rate %.4f vs "
         "log kappa %.4f (25%% band %s), %.0f ms (<120000)",
         ds[0], ds[1], ds[2], ds[3], ds[4], fit.slope, target,
         rate_ok ? "ok" : "MISSED", ms);
}

void criterion_9() {
  const DiagonalIFS ifs = gl_example();
  const GlBoxDims box = gl_box_dims(ifs);
  const GlAssouadLower al = gl_assouad_lower(ifs);
  bool all_ok = true;
  for (double q : {0.25, 0.5, 0.75}) {
    Timer t;
    const double alpha = box.dim_B + q * (al.dim_A - box.dim_B);
    const SequenceSpec seq = sequence_for_target(ifs, alpha, 4);
    // Window length = a multiple of the period, so the estimate is the exact
    // per-period exponent the construction tunes.
    const int m_max = std::max(256, 2 * seq.period.size());
    const FibreAssouad fa = fibre_assouad(fibre_from_carpet(ifs, 1, seq), m_max);
    const double achieved = box.dim_B_proj + fa.estimate;
    const double ms = t.ms();
    const bool ok = std::abs(achieved - alpha) <= 0.02 && ms < 30000.0;
    all_ok = all_ok && ok;
    std::printf("  target q=%.2f: alpha=%.5f achieved=%.5f |diff|=%.4f (tol 0.02), "
                "period %d, %.0f ms (<30000)%s\n",
                q, alpha, achieved, std::abs(achieved - alpha), seq.period.size(), ms,
                ok ? "" : "  <-- FAIL");
  }
  report(9, all_ok, "depth-4 target sequences within 0.02 for q in {0.25, 0.5, 0.75}");
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures > 0)
    std::printf("%d of 9 criteria failed\n", failures);
  else
    std::printf("all 9 criteria passed\n");
  return failures;
}
