#include "carpets/dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "carpets/errors.hpp"

namespace carpets {

namespace {

double safe_log(double x) { return std::log(std::max(x, 1e-300)); }

EquationDiagnostics diag(const std::string &label, const RootResult &r) {
  return {label, r.x, r.residual, r.bracket_lo, r.bracket_hi, r.iterations};
}

ClassificationReport require_kind(const DiagonalIFS &ifs, bool gl_only) {
  const ClassificationReport rep = validate_and_classify(ifs);
  if (gl_only && rep.kind != CarpetKind::GatzourasLalley)
    throw WrongKind("operation requires a Gatzouras-Lalley carpet");
  if (!gl_only && rep.kind == CarpetKind::Neither)
    throw WrongKind("operation requires a Gatzouras-Lalley or Baranski carpet");
  return rep;
}

// ---------------------------------------------------------------------------
// Simplex maximization: projected-gradient ascent with backtracking, from 16
// random starts plus the uniform start. An optional linear constraint
// c·p = 0 restricts the ascent to the boundary manifold χ₁ = χ₂.

struct OptResult {
  double value = -1e300;
  std::vector<double> p;
  double grad_norm = 1e300;
  bool converged = false;
};

std::vector<double> project_feasible(std::vector<double> v, const std::vector<double> *c) {
  if (!c)
    return project_to_simplex(std::move(v));
  const std::size_t n = v.size();
  for (int round = 0; round < 500; ++round) {
    v = project_to_simplex(std::move(v));
    double cv = 0.0, cc = 0.0, c1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cv += (*c)[i] * v[i];
      cc += (*c)[i] * (*c)[i];
      c1 += (*c)[i];
    }
    if (std::abs(cv) <= 1e-14)
      break;
    // Project onto {c·p = 0} within the affine hull {Σp = 1}:
    // v' = v − λ(c − mean(c)) keeps Σv' fixed; pick λ so c·v' = 0.
    const double denom = cc - c1 * c1 / double(n);
    if (denom <= 1e-30)
      break;
    const double lam = cv / denom;
    for (std::size_t i = 0; i < n; ++i)
      v[i] -= lam * ((*c)[i] - c1 / double(n));
  }
  return v;
}

// Norm of the gradient projected onto the feasible tangent space (free
// coordinates only; optionally also orthogonal to the constraint normal).
double projected_grad_norm(const std::vector<double> &p, std::vector<double> g,
                           const std::vector<double> *c) {
  const std::size_t n = p.size();
  std::vector<int> free_idx;
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] > 1e-12)
      free_idx.push_back(int(i));
  if (free_idx.empty())
    return 0.0;
  // Remove the component along 1 (and along c) restricted to free coords.
  auto remove = [&](const std::vector<double> &dir) {
    double dd = 0.0, gd = 0.0;
    for (int i : free_idx) {
      dd += dir[i] * dir[i];
      gd += g[i] * dir[i];
    }
    if (dd > 1e-30)
      for (int i : free_idx)
        g[i] -= gd / dd * dir[i];
  };
  std::vector<double> ones(n, 1.0);
  remove(ones);
  if (c) {
    std::vector<double> cproj = *c;
    // orthogonalize c against 1 on the free set first
    double cs = 0.0;
    for (int i : free_idx)
      cs += cproj[i];
    for (int i : free_idx)
      cproj[i] -= cs / double(free_idx.size());
    remove(cproj);
  }
  double s = 0.0;
  for (int i : free_idx)
    s += g[i] * g[i];
  return std::sqrt(s);
}

// Reduced Newton polish on the support of p: parameterize the feasible
// tangent space by a null-space basis of the active constraints (Σp = 1 and
// optionally c·p = 0) and take damped Newton steps with a finite-difference
// Hessian. Drives the projected gradient norm from ~1e-7 (where plain
// projected-gradient ascent stalls on float plateaus) down to tolerance.
template <class F, class G>
void newton_polish(std::vector<double> &p, const F &f, const G &grad, double tol,
                   const std::vector<double> *c) {
  const std::size_t n = p.size();
  for (int outer = 0; outer < 60; ++outer) {
    std::vector<int> free_idx;
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] > 1e-10)
        free_idx.push_back(int(i));
    const std::size_t nf = free_idx.size();
    if (nf < 2)
      return;
    // Constraint rows restricted to the free set, orthonormalized so that
    // candidate vectors can be orthogonalized against them one at a time.
    std::vector<std::vector<double>> rows;
    rows.push_back(std::vector<double>(nf, 1.0 / std::sqrt(double(nf))));
    if (c) {
      std::vector<double> row(nf);
      for (std::size_t k = 0; k < nf; ++k)
        row[k] = (*c)[free_idx[k]];
      for (const auto &r : rows) {
        double rv = 0.0;
        for (std::size_t i = 0; i < nf; ++i)
          rv += r[i] * row[i];
        for (std::size_t i = 0; i < nf; ++i)
          row[i] -= rv * r[i];
      }
      double norm = 0.0;
      for (double x : row)
        norm += x * x;
      if (norm > 1e-20) {
        norm = std::sqrt(norm);
        for (double &x : row)
          x /= norm;
        rows.push_back(std::move(row));
      }
    }
    // Null-space basis by Gram-Schmidt against the constraint rows.
    std::vector<std::vector<double>> basis;
    for (std::size_t k = 0; k + 1 < nf && basis.size() + rows.size() < nf + 1; ++k) {
      std::vector<double> v(nf, 0.0);
      v[k] = 1.0;
      for (const auto &r : rows) {
        double rv = 0.0, rr = 0.0;
        for (std::size_t i = 0; i < nf; ++i) {
          rv += r[i] * v[i];
          rr += r[i] * r[i];
        }
        if (rr > 0)
          for (std::size_t i = 0; i < nf; ++i)
            v[i] -= rv / rr * r[i];
      }
      for (const auto &b : basis) {
        double bv = 0.0;
        for (std::size_t i = 0; i < nf; ++i)
          bv += b[i] * v[i];
        for (std::size_t i = 0; i < nf; ++i)
          v[i] -= bv * b[i];
      }
      double norm = 0.0;
      for (double x : v)
        norm += x * x;
      if (norm < 1e-12) // inside span(rows, basis) up to rounding
        continue;
      norm = std::sqrt(norm);
      for (double &x : v)
        x /= norm;
      basis.push_back(std::move(v));
    }
    const std::size_t m = basis.size();
    if (m == 0)
      return;
    auto embed = [&](const std::vector<double> &y) {
      std::vector<double> q = p;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < nf; ++i)
          q[free_idx[i]] += y[k] * basis[k][i];
      return q;
    };
    auto reduced_grad = [&](const std::vector<double> &q) {
      const std::vector<double> g = grad(q);
      std::vector<double> gr(m, 0.0);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < nf; ++i)
          gr[k] += g[free_idx[i]] * basis[k][i];
      return gr;
    };
    std::vector<double> gr = reduced_grad(p);
    double gn = 0.0;
    for (double x : gr)
      gn += x * x;
    if (std::sqrt(gn) <= tol)
      return;
    // Finite-difference reduced Hessian.
    const double h = 1e-6;
    std::vector<std::vector<double>> H(m, std::vector<double>(m));
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<double> y(m, 0.0);
      y[k] = h;
      const std::vector<double> gp = reduced_grad(embed(y));
      for (std::size_t l = 0; l < m; ++l)
        H[l][k] = (gp[l] - gr[l]) / h;
    }
    // Solve (-H) y = gr with symmetric regularization (H is ~negative
    // definite at a maximum).
    std::vector<std::vector<double>> A(m, std::vector<double>(m));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l)
        A[k][l] = -0.5 * (H[k][l] + H[l][k]) + (k == l ? 1e-12 : 0.0);
    std::vector<double> y = gr;
    // Gaussian elimination with partial pivoting.
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t piv = k;
      for (std::size_t l = k + 1; l < m; ++l)
        if (std::abs(A[l][k]) > std::abs(A[piv][k]))
          piv = l;
      std::swap(A[k], A[piv]);
      std::swap(y[k], y[piv]);
      if (std::abs(A[k][k]) < 1e-300)
        return;
      for (std::size_t l = k + 1; l < m; ++l) {
        const double fac = A[l][k] / A[k][k];
        for (std::size_t t = k; t < m; ++t)
          A[l][t] -= fac * A[k][t];
        y[l] -= fac * y[k];
      }
    }
    for (std::size_t k = m; k-- > 0;) {
      for (std::size_t l = k + 1; l < m; ++l)
        y[k] -= A[k][l] * y[l];
      y[k] /= A[k][k];
    }
    // Damped step: keep p strictly positive; accept on non-decreasing f, or —
    // once f-differences are below rounding — on a strict drop of the reduced
    // gradient norm (the objective cannot resolve ~gn² improvements near the
    // maximum, but the analytic gradient still can).
    const double f0 = f(p);
    const double gn0 = std::sqrt(gn);
    double damp = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 40; ++ls, damp *= 0.5) {
      std::vector<double> ys(m);
      for (std::size_t k = 0; k < m; ++k)
        ys[k] = damp * y[k];
      std::vector<double> q = embed(ys);
      bool ok = true;
      for (std::size_t i = 0; i < nf; ++i)
        if (q[free_idx[i]] <= 0.0)
          ok = false;
      if (!ok)
        continue;
      bool accept = f(q) >= f0;
      if (!accept && f(q) >= f0 - 1e-13 * (1.0 + std::abs(f0))) {
        const std::vector<double> gq = reduced_grad(q);
        double gnq = 0.0;
        for (double x : gq)
          gnq += x * x;
        accept = std::sqrt(gnq) < 0.9 * gn0;
      }
      if (accept) {
        p = std::move(q);
        moved = true;
        break;
      }
    }
    if (!moved)
      return;
  }
}

template <class F, class G>
OptResult ascend(std::vector<double> p, const F &f, const G &grad, double tol,
                 const std::vector<double> *c) {
  p = project_feasible(std::move(p), c);
  double fp = f(p);
  double step = 1.0;
  OptResult res;
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<double> g = grad(p);
    const double gn = projected_grad_norm(p, g, c);
    if (gn <= tol) {
      res.converged = true;
      res.grad_norm = gn;
      break;
    }
    res.grad_norm = gn;
    bool accepted = false;
    while (step > 1e-18) {
      std::vector<double> q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        q[i] = p[i] + step * g[i];
      q = project_feasible(std::move(q), c);
      const double fq = f(q);
      double moved = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i)
        moved += (q[i] - p[i]) * (q[i] - p[i]);
      if (fq > fp && moved > 0.0) {
        p = std::move(q);
        fp = fq;
        accepted = true;
        step = std::min(step * 2.0, 1e3);
        break;
      }
      step *= 0.5;
    }
    if (!accepted)
      break; // step underflow: stationary to machine precision
  }
  if (!res.converged) {
    newton_polish(p, f, grad, tol, c);
    const double gn = projected_grad_norm(p, grad(p), c);
    res.grad_norm = gn;
    res.converged = gn <= tol;
    fp = f(p);
  }
  res.value = fp;
  res.p = std::move(p);
  return res;
}

template <class F, class G>
OptResult maximize_on_simplex(std::size_t n, const F &f, const G &grad, double tol,
                              const std::vector<double> *c) {
  std::mt19937 rng(20240517);
  std::exponential_distribution<double> expd(1.0);
  OptResult best, best_converged;
  double best_grad_norm = 1e300;
  for (int restart = 0; restart < 17; ++restart) {
    std::vector<double> p0(n, 1.0 / double(n));
    if (restart > 0) {
      double s = 0.0;
      for (auto &x : p0) {
        x = expd(rng);
        s += x;
      }
      for (auto &x : p0)
        x /= s;
    }
    OptResult r = ascend(std::move(p0), f, grad, tol, c);
    best_grad_norm = std::min(best_grad_norm, r.grad_norm);
    if (r.converged && r.value > best_converged.value)
      best_converged = r;
    if (r.value > best.value)
      best = std::move(r);
  }
  if (!best_converged.converged) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "simplex optimizer: no restart reached the gradient tolerance "
                  "(best residual norm %.3e)",
                  best_grad_norm);
    throw ConvergenceFailure(msg);
  }
  // Restarts may land on inferior local stationary points; the result is the
  // max. Fail only when the best value seen is not certified by a converged
  // restart — then the reported maximum would rest on an unfinished ascent.
  if (best.value - best_converged.value > 1e-6)
    throw ConvergenceFailure("simplex optimizer: converged restarts disagree with the "
                             "best ascent by " +
                             std::to_string(best.value - best_converged.value));
  return best_converged;
}

// Objective s_j(p) = H(η_j p)/χ_j + (H − H(η_j p))/χ_{j'} and its gradient.
struct DirectionObjective {
  const DiagonalIFS *ifs;
  int j;                     // projection axis
  std::vector<int> cls;      // η_j-class of each letter

  double operator()(const std::vector<double> &p) const {
    const int jp = 3 - j;
    double H = 0.0;
    for (double x : p)
      H -= xlogx(x);
    std::vector<double> q;
    double Hq = 0.0;
    {
      int nc = 0;
      for (int ci : cls)
        nc = std::max(nc, ci + 1);
      q.assign(nc, 0.0);
      for (std::size_t i = 0; i < p.size(); ++i)
        q[cls[i]] += p[i];
      for (double x : q)
        Hq -= xlogx(x);
    }
    const double chij = lyapunov(*ifs, j, p);
    const double chijp = lyapunov(*ifs, jp, p);
    return Hq / chij + (H - Hq) / chijp;
  }

  std::vector<double> gradient(const std::vector<double> &p) const {
    const int jp = 3 - j;
    const std::size_t n = p.size();
    int nc = 0;
    for (int ci : cls)
      nc = std::max(nc, ci + 1);
    std::vector<double> q(nc, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      q[cls[i]] += p[i];
    double H = 0.0, Hq = 0.0;
    for (double x : p)
      H -= xlogx(x);
    for (double x : q)
      Hq -= xlogx(x);
    const double chij = lyapunov(*ifs, j, p);
    const double chijp = lyapunov(*ifs, jp, p);
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double dHq = -safe_log(q[cls[i]]) - 1.0;
      const double dH = -safe_log(p[i]) - 1.0;
      const double lrj = safe_log(ifs->ratio(int(i), j));
      const double lrjp = safe_log(ifs->ratio(int(i), jp));
      g[i] = dHq / chij + Hq * lrj / (chij * chij) + (dH - dHq) / chijp +
             (H - Hq) * lrjp / (chijp * chijp);
    }
    return g;
  }
};

DirectionObjective make_objective(const DiagonalIFS &ifs, int axis) {
  DirectionObjective obj;
  obj.ifs = &ifs;
  obj.j = axis;
  const ColumnStructure cs = column_structure(ifs, axis);
  obj.cls.assign(ifs.size(), 0);
  for (std::size_t c = 0; c < cs.classes.size(); ++c)
    for (int i : cs.classes[c])
      obj.cls[i] = int(c);
  return obj;
}

// Maximize s_j over P_j = {χ_j(p) ≤ χ_{j'}(p)}: free ascent first, then the
// χ₁=χ₂ boundary manifold when the free optimum violates the constraint.
// Returns false when P_j is empty.
bool direction_hausdorff(const DiagonalIFS &ifs, int axis, double tol, OptResult &out) {
  const DirectionObjective obj = make_objective(ifs, axis);
  const int jp = 3 - axis;
  std::vector<double> c(ifs.size());
  double cmin = 1e300;
  for (int i = 0; i < ifs.size(); ++i) {
    c[i] = std::log(ifs.ratio(i, jp)) - std::log(ifs.ratio(i, axis));
    cmin = std::min(cmin, c[i]);
  }
  if (cmin > 1e-15)
    return false; // no probability vector satisfies χ_j ≤ χ_{j'}
  auto f = [&](const std::vector<double> &p) { return obj(p); };
  auto g = [&](const std::vector<double> &p) { return obj.gradient(p); };
  OptResult free_opt = maximize_on_simplex(std::size_t(ifs.size()), f, g, tol, nullptr);
  double cdot = 0.0;
  for (int i = 0; i < ifs.size(); ++i)
    cdot += c[i] * free_opt.p[i];
  if (cdot <= 1e-10) {
    out = std::move(free_opt);
    return true;
  }
  out = maximize_on_simplex(std::size_t(ifs.size()), f, g, tol, &c);
  return true;
}

} // namespace

double entropy(const std::vector<double> &p) {
  double h = 0.0;
  for (double x : p)
    h -= xlogx(x);
  return h;
}

double projected_entropy(const DiagonalIFS &ifs, int axis, const std::vector<double> &p) {
  const ColumnStructure cs = column_structure(ifs, axis);
  double h = 0.0;
  for (const auto &cl : cs.classes) {
    double q = 0.0;
    for (int i : cl)
      q += p[i];
    h -= xlogx(q);
  }
  return h;
}

double lyapunov(const DiagonalIFS &ifs, int axis, const std::vector<double> &p) {
  double chi = 0.0;
  for (int i = 0; i < ifs.size(); ++i)
    chi -= p[i] * std::log(ifs.ratio(i, axis));
  return chi;
}

RootResult moran_dimension_detail(const std::vector<double> &ratios, double tol) {
  if (ratios.empty())
    throw NoSolution("moran_dimension on an empty ratio list");
  for (double r : ratios)
    if (!(r > 0.0 && r < 1.0))
      throw Degenerate("moran_dimension: ratio outside (0,1)");
  if (ratios.size() == 1)
    return {0.0, 0.0, 0.0, 0.0, 0}; // single map: exact similarity dimension 0
  auto f = [&](double s) {
    double sum = -1.0;
    for (double r : ratios)
      sum += std::pow(r, s);
    return sum;
  };
  auto df = [&](double s) {
    double sum = 0.0;
    for (double r : ratios)
      sum += std::pow(r, s) * std::log(r);
    return sum;
  };
  return solve_decreasing(f, 0.0, 2.0, tol, df);
}

double moran_dimension(const std::vector<double> &ratios, double tol) {
  return moran_dimension_detail(ratios, tol).x;
}

GlBoxDims gl_box_dims(const DiagonalIFS &ifs) {
  require_kind(ifs, true);
  const ColumnStructure cs = column_structure(ifs, 1);
  GlBoxDims out;
  const RootResult proj = moran_dimension_detail(cs.class_ratio);
  out.dim_B_proj = proj.x;
  out.proj_eq = diag("sum_classes a^s = 1", proj);
  const double sB = out.dim_B_proj;
  auto f = [&](double s) {
    double sum = -1.0;
    for (int i = 0; i < ifs.size(); ++i)
      sum += std::pow(ifs.a(i), sB) * std::pow(ifs.b(i), s - sB);
    return sum;
  };
  auto df = [&](double s) {
    double sum = 0.0;
    for (int i = 0; i < ifs.size(); ++i)
      sum += std::pow(ifs.a(i), sB) * std::pow(ifs.b(i), s - sB) * std::log(ifs.b(i));
    return sum;
  };
  const RootResult box = solve_decreasing(f, sB, std::max(2.0, sB + 1.0), 1e-12, df);
  out.dim_B = box.x;
  out.box_eq = diag("sum_i a^sB b^(s-sB) = 1", box);
  return out;
}

HausdorffResult gl_hausdorff(const DiagonalIFS &ifs, double tol) {
  require_kind(ifs, true);
  const DirectionObjective obj = make_objective(ifs, 1);
  auto f = [&](const std::vector<double> &p) { return obj(p); };
  auto g = [&](const std::vector<double> &p) { return obj.gradient(p); };
  OptResult r = maximize_on_simplex(std::size_t(ifs.size()), f, g, tol, nullptr);
  HausdorffResult out;
  out.value = r.value;
  out.p_star = std::move(r.p);
  out.grad_norm = r.grad_norm;
  out.converged_restarts = r.converged ? 1 : 0;
  return out;
}

GlAssouadLower gl_assouad_lower(const DiagonalIFS &ifs) {
  require_kind(ifs, true);
  const GlBoxDims box = gl_box_dims(ifs);
  const ColumnStructure cs = column_structure(ifs, 1);
  GlAssouadLower out;
  double tmax = 0.0, tmin = 1e300;
  for (const auto &cl : cs.classes) {
    std::vector<double> bs;
    for (int i : cl)
      bs.push_back(ifs.b(i));
    const double t = moran_dimension(bs);
    out.t.push_back(t);
    tmax = std::max(tmax, t);
    tmin = std::min(tmin, t);
  }
  out.dim_A = box.dim_B_proj + tmax;
  out.dim_L = box.dim_B_proj + tmin;
  return out;
}

DimensionReport baranski_dims(const DiagonalIFS &ifs, double tol) {
  const ClassificationReport cls = require_kind(ifs, false);
  DimensionReport rep;
  rep.kind = cls.kind;

  // Per-direction projected box dimensions and slice exponents. The slice
  // equation uses the ratio orthogonal to the projection axis.
  double Bproj[2], tmax[2], tmin[2];
  for (int j = 1; j <= 2; ++j) {
    const ColumnStructure csj = column_structure(ifs, j);
    const RootResult proj = moran_dimension_detail(csj.class_ratio);
    Bproj[j - 1] = proj.x;
    rep.equations.push_back(diag("axis" + std::to_string(j) + " projected Moran", proj));
    tmax[j - 1] = 0.0;
    tmin[j - 1] = 1e300;
    for (const auto &cl : csj.classes) {
      std::vector<double> rs;
      for (int i : cl)
        rs.push_back(ifs.ratio(i, 3 - j));
      const double t = moran_dimension(rs);
      rep.t_class[j - 1].push_back(t);
      tmax[j - 1] = std::max(tmax[j - 1], t);
      tmin[j - 1] = std::min(tmin[j - 1], t);
    }
    rep.dim_B_proj[j - 1] = Bproj[j - 1];
    rep.assouad_candidate[j - 1] = Bproj[j - 1] + tmax[j - 1];
  }

  if (cls.kind == CarpetKind::GatzourasLalley) {
    // GL delegates: direction-1 formulas are exact for GL carpets.
    const GlBoxDims box = gl_box_dims(ifs);
    const HausdorffResult h = gl_hausdorff(ifs, tol);
    const GlAssouadLower al = gl_assouad_lower(ifs);
    rep.dim_B = box.dim_B;
    rep.dim_H = h.value;
    rep.optimizer_p = h.p_star;
    rep.optimizer_p_direction[0] = h.p_star;
    rep.d_direction[0] = h.value;
    rep.dim_A = al.dim_A;
    rep.dim_L = al.dim_L;
    return rep;
  }

  // Direction box dimensions: sum_i ctr_{i,j}^{B_j} ctr_{i,j'}^{s-B_j} = 1.
  double boxdir[2];
  for (int j = 1; j <= 2; ++j) {
    const double B = Bproj[j - 1];
    auto f = [&](double s) {
      double sum = -1.0;
      for (int i = 0; i < ifs.size(); ++i)
        sum += std::pow(ifs.ratio(i, j), B) * std::pow(ifs.ratio(i, 3 - j), s - B);
      return sum;
    };
    const RootResult r = solve_decreasing(f, B, std::max(2.0, B + 1.0), 1e-12);
    boxdir[j - 1] = r.x;
    rep.equations.push_back(diag("axis" + std::to_string(j) + " box Moran", r));
  }
  rep.dim_B = std::max(boxdir[0], boxdir[1]);

  rep.dim_H = 0.0;
  for (int j = 1; j <= 2; ++j) {
    OptResult r;
    if (direction_hausdorff(ifs, j, tol, r)) {
      rep.d_direction[j - 1] = r.value;
      rep.optimizer_p_direction[j - 1] = r.p;
      if (r.value > rep.dim_H) {
        rep.dim_H = r.value;
        rep.optimizer_p = r.p;
      }
    }
  }

  rep.dim_A = std::max(rep.assouad_candidate[0], rep.assouad_candidate[1]);
  rep.dim_L = std::min(Bproj[0] + tmin[0], Bproj[1] + tmin[1]);

  try {
    rep.p0 = extract_reduced_profile(ifs).p0;
  } catch (const ValidationError &) {
    // not a two-block instance; p0 stays unset
  }
  return rep;
}

double box_dimension(const DiagonalIFS &ifs) {
  const ClassificationReport cls = require_kind(ifs, false);
  if (cls.kind == CarpetKind::GatzourasLalley)
    return gl_box_dims(ifs).dim_B;
  double best = 0.0;
  for (int j = 1; j <= 2; ++j) {
    const ColumnStructure csj = column_structure(ifs, j);
    const double B = moran_dimension(csj.class_ratio);
    auto f = [&](double s) {
      double sum = -1.0;
      for (int i = 0; i < ifs.size(); ++i)
        sum += std::pow(ifs.ratio(i, j), B) * std::pow(ifs.ratio(i, 3 - j), s - B);
      return sum;
    };
    best = std::max(best, solve_decreasing(f, B, std::max(2.0, B + 1.0), 1e-12).x);
  }
  return best;
}

ReducedProfile extract_reduced_profile(const DiagonalIFS &ifs) {
  // Recognize the two-block symmetry: all heights equal β; one column of four
  // maps with width α₁; four columns of two maps each with width α₂.
  const double beta = ifs.b(0);
  for (int i = 0; i < ifs.size(); ++i)
    if (std::abs(ifs.b(i) - beta) > 1e-12)
      throw ValidationError("reduced profile: heights differ");
  const ColumnStructure cs = column_structure(ifs, 1);
  if (ifs.size() != 12 || cs.classes.size() != 5)
    throw ValidationError("reduced profile: expected 12 maps in 5 columns");
  double a1 = -1.0, a2 = -1.0;
  for (std::size_t c = 0; c < cs.classes.size(); ++c) {
    if (cs.classes[c].size() == 4) {
      if (a1 >= 0.0)
        throw ValidationError("reduced profile: two wide columns");
      a1 = cs.class_ratio[c];
    } else if (cs.classes[c].size() == 2) {
      if (a2 >= 0.0 && std::abs(cs.class_ratio[c] - a2) > 1e-12)
        throw ValidationError("reduced profile: narrow columns differ");
      a2 = cs.class_ratio[c];
    } else {
      throw ValidationError("reduced profile: unexpected column size");
    }
  }
  if (a1 < 0.0 || a2 < 0.0)
    throw ValidationError("reduced profile: missing block");
  ReducedProfile rp;
  rp.alpha1 = a1;
  rp.alpha2 = a2;
  rp.beta = beta;
  rp.p0 = (std::log(a1) - std::log(beta)) / (std::log(a1) - std::log(a2));
  return rp;
}

double baranski_profile_D(const DiagonalIFS &ifs_reduced, int j, double p) {
  if (p < 0.0 || p > 1.0)
    throw DomainError("profile parameter p must lie in [0,1]");
  if (j != 1 && j != 2)
    throw DomainError("profile direction j must be 1 or 2");
  const ReducedProfile rp = extract_reduced_profile(ifs_reduced);
  const double H2 = -xlogx(p) - xlogx(1.0 - p);
  const double chi1 = -p * std::log(rp.alpha2) - (1.0 - p) * std::log(rp.alpha1);
  const double chi2 = -std::log(rp.beta);
  if (j == 1)
    return (H2 + p * std::log(4.0)) / chi1 + (2.0 - p) * std::log(2.0) / chi2;
  return (H2 + p * std::log(2.0)) / chi1 + std::log(4.0) / chi2;
}

ProfileMax baranski_profile_sup(const DiagonalIFS &ifs_reduced, int j) {
  auto f = [&](double p) { return baranski_profile_D(ifs_reduced, j, p); };
  // Coarse grid, then golden-section refinement around the best cell.
  double best = 0.0, bestp = 0.0;
  const int n = 1000;
  for (int i = 0; i <= n; ++i) {
    const double p = double(i) / n;
    const double v = f(p);
    if (v > best) {
      best = v;
      bestp = p;
    }
  }
  double lo = std::max(0.0, bestp - 1.0 / n), hi = std::min(1.0, bestp + 1.0 / n);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    }
  }
  ProfileMax pm;
  pm.argmax = 0.5 * (lo + hi);
  pm.value = f(pm.argmax);
  return pm;
}

} // namespace carpets
