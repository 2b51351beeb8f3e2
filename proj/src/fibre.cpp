#include "carpets/fibre.hpp"

#include <algorithm>
#include <cmath>

#include "carpets/dimensions.hpp"
#include "carpets/errors.hpp"

namespace carpets {

NonAutoFibre make_fibre(std::vector<std::vector<double>> components, SequenceSpec levels) {
  if (components.empty())
    throw ValidationError("fibre needs at least one component");
  NonAutoFibre f;
  f.r_min = 1.0;
  for (const auto &comp : components) {
    if (comp.empty())
      throw ValidationError("fibre component must be nonempty");
    for (double r : comp) {
      if (!(r > 0.0 && r < 1.0))
        throw ValidationError("fibre ratio outside (0,1)");
      f.r_min = std::min(f.r_min, r);
    }
  }
  auto check = [&](const Word &w) {
    for (int l : w.letters)
      if (l < 0 || l >= int(components.size()))
        throw ValidationError("level sequence letter outside component alphabet");
  };
  check(levels.preperiod);
  check(levels.period);
  f.components = std::move(components);
  f.levels = std::move(levels);
  return f;
}

NonAutoFibre fibre_from_carpet(const DiagonalIFS &ifs, int axis, const SequenceSpec &gamma) {
  validate_letters(gamma, ifs);
  const ColumnStructure cs = column_structure(ifs, axis);
  std::vector<std::vector<double>> comps(cs.classes.size());
  std::vector<int> class_of(std::size_t(ifs.size()));
  for (std::size_t c = 0; c < cs.classes.size(); ++c)
    for (int i : cs.classes[c]) {
      comps[c].push_back(ifs.ratio(i, 3 - axis));
      class_of[std::size_t(i)] = int(c);
    }
  auto remap = [&](const Word &w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (int l : w.letters)
      out.letters.push_back(class_of[std::size_t(l)]);
    return out;
  };
  SequenceSpec levels =
      SequenceSpec::periodic(remap(gamma.preperiod), remap(gamma.period));
  return make_fibre(std::move(comps), std::move(levels));
}

RootResult theta_detail(const NonAutoFibre &fibre, long long n, int m, double tol) {
  if (m < 1)
    throw DomainError("theta needs m >= 1");
  // S_k(θ) depends on level k only through the component id, so aggregate the
  // window into per-component counts once and solve on the factorized form
  // g(θ) = Σ_c count_c · log S_c(θ), strictly decreasing with g(0) ≥ 0.
  std::vector<long long> count(fibre.components.size(), 0);
  for (int k = 0; k < m; ++k)
    ++count[std::size_t(fibre.levels.letter(n + k))];
  auto g = [&](double th) {
    double sum = 0.0;
    for (std::size_t c = 0; c < count.size(); ++c) {
      if (count[c] == 0)
        continue;
      double s = 0.0;
      for (double r : fibre.components[c])
        s += std::exp(th * std::log(r));
      sum += double(count[c]) * std::log(s);
    }
    return sum;
  };
  auto dg = [&](double th) {
    double sum = 0.0;
    for (std::size_t c = 0; c < count.size(); ++c) {
      if (count[c] == 0)
        continue;
      double s = 0.0, ds = 0.0;
      for (double r : fibre.components[c]) {
        const double x = std::exp(th * std::log(r));
        s += x;
        ds += x * std::log(r);
      }
      sum += double(count[c]) * ds / s;
    }
    return sum;
  };
  if (g(0.0) <= tol)
    return {0.0, g(0.0), 0.0, 0.0, 0};
  return solve_decreasing(g, 0.0, 2.0, tol, dg);
}

double theta(const NonAutoFibre &fibre, long long n, int m, double tol) {
  return theta_detail(fibre, n, m, tol).x;
}

double theta_bruteforce(const NonAutoFibre &fibre, long long n, int m, double tol) {
  if (m < 1)
    throw DomainError("theta needs m >= 1");
  double count = 1.0;
  for (int k = 0; k < m; ++k)
    count *= double(fibre.component_at(n + k).size());
  if (count > 1e6)
    throw TooLarge("theta_bruteforce: tuple count exceeds 1e6");
  // Enumerate all tuples and collect the product contraction ratios.
  std::vector<double> products{1.0};
  for (int k = 0; k < m; ++k) {
    const auto &comp = fibre.component_at(n + k);
    std::vector<double> next;
    next.reserve(products.size() * comp.size());
    for (double p : products)
      for (double r : comp)
        next.push_back(p * r);
    products = std::move(next);
  }
  if (products.size() == 1)
    return 0.0;
  return moran_dimension(products, tol);
}

FibreAssouad fibre_assouad(const NonAutoFibre &fibre, int m_max) {
  if (m_max < 1)
    throw DomainError("fibre_assouad needs m_max >= 1");
  const long long pre = fibre.levels.preperiod.size();
  const long long per = fibre.levels.period.size();
  const long long windows = pre + per;
  if (windows > 100000)
    throw TooLarge("fibre_assouad: more than 1e5 distinct windows");
  FibreAssouad out;
  out.windows = int(windows);
  // θ(n, m) depends on n only through n mod period once n ≥ preperiod, so
  // offsets 0 .. pre+per−1 exhaust all distinct length-m windows.
  for (long long nn = 0; nn < windows; ++nn)
    out.estimate = std::max(out.estimate, theta(fibre, nn, m_max));

  // Property (ii) continuity constant, fitted on the actual fibre:
  // |θ(n, m+k) − θ(n', m)| ≤ C k/m for n ≤ n' ≤ n+k.
  double C = 0.0;
  const int m = m_max;
  const int ks[] = {1, std::max(1, m_max / 4), std::max(1, m_max / 2)};
  const long long stride = std::max<long long>(1, windows / 16);
  for (long long nn = 0; nn < windows; nn += stride)
    for (int k : ks) {
      const double big = theta(fibre, nn, m + k);
      for (long long np : {nn, nn + k}) {
        const double small = theta(fibre, np, m);
        C = std::max(C, std::abs(big - small) * double(m) / double(k));
      }
    }
  out.fitted_C = C;
  // Window-alignment uncertainty at the evaluation length. Exactly 0 for
  // constant fibres. Empirical, not a proved enclosure.
  out.error_bound = C * double(per) / double(m_max);
  return out;
}

PropertyReport check_theta_properties(const NonAutoFibre &fibre,
                                      const std::vector<ThetaTriple> &samples) {
  PropertyReport rep;
  for (const auto &[n, m, k] : samples) {
    if (m < 1 || k < 1)
      throw DomainError("property sample needs m,k >= 1");
    ++rep.samples;
    const double whole = theta(fibre, n, m + k);
    const double left = theta(fibre, n, m);
    const double right = theta(fibre, n + m, k);
    const double excess = whole - std::max(left, right);
    rep.worst_excess = std::max(rep.worst_excess, excess);
    if (excess > 1e-9)
      ++rep.submax_violations;
    for (long long np : {n, n + k}) {
      const double shifted = theta(fibre, np, m);
      rep.continuity_C =
          std::max(rep.continuity_C, std::abs(whole - shifted) * double(m) / double(k));
    }
  }
  return rep;
}

} // namespace carpets
