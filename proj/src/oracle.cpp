#include "carpets/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_set>

#include "carpets/errors.hpp"
#include "carpets/omp_compat.hpp"
#include "carpets/symbolic.hpp"

namespace carpets {

namespace {

double max_ratio(const DiagonalIFS &ifs) {
  double m = 0.0;
  for (int i = 0; i < ifs.size(); ++i)
    m = std::max(m, std::max(ifs.a(i), ifs.b(i)));
  return m;
}

// Smallest depth at which every cylinder rectangle has diameter ≤ bound.
int depth_for_diameter(const DiagonalIFS &ifs, double bound) {
  const double mr = max_ratio(ifs);
  int d = 0;
  double diam = std::sqrt(2.0);
  while (diam > bound) {
    diam *= mr;
    ++d;
    if (d > 10000)
      throw TooLarge("required cover depth exceeds 10000 levels");
  }
  return d;
}

// Grid cells [i δ, (i+1) δ] met by [x, x+w], left-closed convention.
void cell_range(double lo, double len, double delta, int grid, int &i0, int &i1) {
  i0 = std::clamp(int(std::floor(lo / delta)), 0, grid - 1);
  i1 = std::clamp(int(std::ceil((lo + len) / delta)) - 1, i0, grid - 1);
}

long long count_grid_cells(const RectCover &cover, double delta, bool parallel) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw DomainError("box mesh must lie in (0,1]");
  const int grid = int(std::ceil(1.0 / delta - 1e-12));
  std::vector<std::uint8_t> hit(std::size_t(grid) * std::size_t(grid), 0);
  const long long n = (long long)cover.rects.size();
  // Marking writes only the value 1, so concurrent marks are benign.
#pragma omp parallel for schedule(static) if (parallel && use_omp)
  for (long long t = 0; t < n; ++t) {
    const Rect &r = cover.rects[std::size_t(t)];
    int x0, x1, y0, y1;
    cell_range(r.x, r.w, delta, grid, x0, x1);
    cell_range(r.y, r.h, delta, grid, y0, y1);
    for (int ix = x0; ix <= x1; ++ix)
      for (int iy = y0; iy <= y1; ++iy)
        hit[std::size_t(ix) * std::size_t(grid) + std::size_t(iy)] = 1;
  }
  long long count = 0;
  for (std::uint8_t h : hit)
    count += h;
  return count;
}

RectCover cover_for_mesh(const DiagonalIFS &ifs, double delta, int depth,
                         std::int64_t budget) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw DomainError("box mesh must lie in (0,1]");
  if (depth < 0)
    depth = depth_for_diameter(ifs, delta / 2.0);
  return cylinder_cover(ifs, depth, budget);
}

// Spatial hash over a cloud for nearest-point queries.
struct PointGrid {
  double x0 = 0.0, y0 = 0.0, h = 1.0;
  int gx = 1, gy = 1;
  std::vector<std::vector<std::pair<double, double>>> cells;

  explicit PointGrid(const std::vector<std::pair<double, double>> &pts) {
    double x1 = -std::numeric_limits<double>::infinity(), y1 = x1;
    x0 = std::numeric_limits<double>::infinity();
    y0 = x0;
    for (const auto &[x, y] : pts) {
      x0 = std::min(x0, x);
      y0 = std::min(y0, y);
      x1 = std::max(x1, x);
      y1 = std::max(y1, y);
    }
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    const int target = std::max(1, int(std::sqrt(double(pts.size()))));
    h = span / double(target);
    gx = int(std::floor((x1 - x0) / h)) + 1;
    gy = int(std::floor((y1 - y0) / h)) + 1;
    cells.resize(std::size_t(gx) * std::size_t(gy));
    for (const auto &p : pts)
      cells[index(p.first, p.second)].push_back(p);
  }

  std::size_t index(double x, double y) const {
    const int ix = std::clamp(int(std::floor((x - x0) / h)), 0, gx - 1);
    const int iy = std::clamp(int(std::floor((y - y0) / h)), 0, gy - 1);
    return std::size_t(ix) * std::size_t(gy) + std::size_t(iy);
  }

  // Exact nearest distance by expanding Chebyshev rings: cells at ring r are
  // at least (r−1)·h away, so the scan stops once that exceeds the best.
  double nearest(double x, double y) const {
    const int cx = std::clamp(int(std::floor((x - x0) / h)), 0, gx - 1);
    const int cy = std::clamp(int(std::floor((y - y0) / h)), 0, gy - 1);
    double best = std::numeric_limits<double>::infinity();
    const int max_ring = std::max(gx, gy);
    for (int ring = 0; ring <= max_ring; ++ring) {
      if (double(ring - 1) * h >= best)
        break;
      for (int ix = cx - ring; ix <= cx + ring; ++ix) {
        if (ix < 0 || ix >= gx)
          continue;
        for (int iy = cy - ring; iy <= cy + ring; ++iy) {
          if (iy < 0 || iy >= gy)
            continue;
          if (std::max(std::abs(ix - cx), std::abs(iy - cy)) != ring)
            continue; // interior cells were scanned on earlier rings
          for (const auto &[px, py] : cells[std::size_t(ix) * std::size_t(gy) +
                                            std::size_t(iy)])
            best = std::min(best, std::hypot(px - x, py - y));
        }
      }
    }
    return best;
  }
};

} // namespace

RectCover cylinder_cover(const DiagonalIFS &ifs, int depth, std::int64_t budget) {
  if (depth < 0)
    throw DomainError("cover depth must be nonnegative");
  double total = 1.0;
  for (int d = 0; d < depth; ++d)
    total *= double(ifs.size());
  if (total > double(budget))
    throw BudgetExceeded("cylinder_cover: rectangle count exceeds the budget");
  RectCover cover;
  cover.depth = depth;
  cover.rects.reserve(std::size_t(total));
  std::function<void(int, Rect)> rec = [&](int d, Rect r) {
    if (d == depth) {
      cover.rects.push_back(r);
      return;
    }
    for (int i = 0; i < ifs.size(); ++i)
      rec(d + 1, Rect{r.x + r.w * ifs.dx(i), r.y + r.h * ifs.dy(i), r.w * ifs.a(i),
                      r.h * ifs.b(i)});
  };
  rec(0, Rect{0.0, 0.0, 1.0, 1.0});
  return cover;
}

long long box_count(const DiagonalIFS &ifs, double delta, int depth, std::int64_t budget) {
  return count_grid_cells(cover_for_mesh(ifs, delta, depth, budget), delta, true);
}

long long box_count_reference(const DiagonalIFS &ifs, double delta, int depth,
                              std::int64_t budget) {
  return count_grid_cells(cover_for_mesh(ifs, delta, depth, budget), delta, false);
}

std::pair<double, double> symbolic_point(const DiagonalIFS &ifs, const SequenceSpec &gamma,
                                         double resolution) {
  validate_letters(gamma, ifs);
  if (!(resolution > 0.0))
    throw DomainError("symbolic_point needs a positive resolution");
  Rect r{0.0, 0.0, 1.0, 1.0};
  long long t = 0;
  while (std::hypot(r.w, r.h) >= resolution) {
    const int i = gamma.letter(t++);
    r = Rect{r.x + r.w * ifs.dx(i), r.y + r.h * ifs.dy(i), r.w * ifs.a(i), r.h * ifs.b(i)};
    if (t > 1000000)
      throw TooLarge("symbolic_point: prefix iteration exceeded 1e6 levels");
  }
  return {r.x + r.w / 2.0, r.y + r.h / 2.0};
}

long long local_count(const DiagonalIFS &ifs, const SequenceSpec &gamma, double R, double r,
                      int depth, std::int64_t budget) {
  if (!(r > 0.0 && R >= r))
    throw DomainError("local_count needs 0 < r <= R");
  const auto [px, py] = symbolic_point(ifs, gamma, r / 10.0);
  const RectCover cover = cylinder_cover(ifs, depth, budget);
  std::unordered_set<long long> cells;
  std::int64_t visited = 0;
  // Index the r-mesh relative to the global [0,1] grid so counts at matching
  // mesh stay comparable with box_count.
  const int grid = int(std::ceil(1.0 / r - 1e-12));
  for (const Rect &rect : cover.rects) {
    // Clip to the ball's bounding box first.
    const double lx = std::max(rect.x, px - R), hx = std::min(rect.x + rect.w, px + R);
    const double ly = std::max(rect.y, py - R), hy = std::min(rect.y + rect.h, py + R);
    if (lx > hx || ly > hy)
      continue;
    int x0, x1, y0, y1;
    cell_range(lx, hx - lx, r, grid, x0, x1);
    cell_range(ly, hy - ly, r, grid, y0, y1);
    for (int ix = x0; ix <= x1; ++ix)
      for (int iy = y0; iy <= y1; ++iy) {
        if (++visited > budget)
          throw BudgetExceeded("local_count: cell visits exceeded the budget");
        // Closest point of the cell to the center must be within R.
        const double cx = std::clamp(px, ix * r, (ix + 1) * r);
        const double cy = std::clamp(py, iy * r, (iy + 1) * r);
        if (std::hypot(cx - px, cy - py) <= R)
          cells.insert((long long)ix * (long long)grid + iy);
      }
  }
  return (long long)cells.size();
}

PointCloud tangent_approx(const DiagonalIFS &ifs, const SequenceSpec &gamma, int n,
                          double resolution, std::int64_t budget) {
  validate_letters(gamma, ifs);
  if (!(resolution > 0.0 && resolution < 1.0))
    throw DomainError("resolution must lie in (0,1)");
  const long long L = n == 0 ? 0 : L_index(ifs, gamma, n);
  double wx0 = 0.0, wxs = 1.0, wy0 = 0.0, wys = 1.0;
  for (long long t = 0; t < L; ++t) {
    const int i = gamma.letter(t);
    wx0 += wxs * ifs.dx(i);
    wxs *= ifs.a(i);
  }
  for (int t = 0; t < n; ++t) {
    const int i = gamma.letter(t);
    wy0 += wys * ifs.dy(i);
    wys *= ifs.b(i);
  }
  PointCloud cloud;
  cloud.resolution = resolution;
  std::int64_t nodes = 0;
  std::function<void(Rect)> rec = [&](Rect r) {
    if (++nodes > budget)
      throw BudgetExceeded("tangent_approx: node budget exceeded");
    if (r.x + r.w < wx0 || r.x > wx0 + wxs || r.y + r.h < wy0 || r.y > wy0 + wys)
      return; // cylinder misses the magnification window
    if (r.w <= resolution * wxs && r.h <= resolution * wys) {
      const double x = (r.x + r.w / 2.0 - wx0) / wxs;
      const double y = (r.y + r.h / 2.0 - wy0) / wys;
      if (x >= -resolution && x <= 1.0 + resolution && y >= -resolution &&
          y <= 1.0 + resolution)
        cloud.points.emplace_back(std::clamp(x, 0.0, 1.0), std::clamp(y, 0.0, 1.0));
      return;
    }
    for (int i = 0; i < ifs.size(); ++i)
      rec(Rect{r.x + r.w * ifs.dx(i), r.y + r.h * ifs.dy(i), r.w * ifs.a(i),
               r.h * ifs.b(i)});
  };
  rec(Rect{0.0, 0.0, 1.0, 1.0});
  if (cloud.points.empty())
    throw EmptyCloud("tangent_approx produced no points");
  return cloud;
}

PointCloud product_approx(const DiagonalIFS &ifs, const SequenceSpec &gamma, int n,
                          double resolution, std::int64_t budget) {
  validate_letters(gamma, ifs);
  if (!(resolution > 0.0 && resolution < 1.0))
    throw DomainError("resolution must lie in (0,1)");
  const ColumnStructure cs = column_structure(ifs, 1);
  std::int64_t nodes = 0;
  auto spend = [&]() {
    if (++nodes > budget)
      throw BudgetExceeded("product_approx: node budget exceeded");
  };

  // η(K): 1-D class-map DFS on the x-axis.
  std::vector<double> xs;
  std::function<void(double, double)> recx = [&](double lo, double len) {
    spend();
    if (len <= resolution) {
      xs.push_back(lo + len / 2.0);
      return;
    }
    for (std::size_t c = 0; c < cs.classes.size(); ++c)
      recx(lo + len * cs.class_trans[c], len * cs.class_ratio[c]);
  };
  recx(0.0, 1.0);

  // Fibre window: the level sequence follows the classes of γ, each level
  // offering the y-maps of that class; rescale through the y-prefix of γ|n.
  double wy0 = 0.0, wys = 1.0;
  for (int t = 0; t < n; ++t) {
    const int i = gamma.letter(t);
    wy0 += wys * ifs.dy(i);
    wys *= ifs.b(i);
  }
  std::vector<double> ys;
  std::function<void(long long, double, double)> recy = [&](long long lvl, double lo,
                                                            double len) {
    spend();
    if (lo + len < wy0 || lo > wy0 + wys)
      return;
    if (len <= resolution * wys) {
      const double y = (lo + len / 2.0 - wy0) / wys;
      if (y >= -resolution && y <= 1.0 + resolution)
        ys.push_back(std::clamp(y, 0.0, 1.0));
      return;
    }
    const int cls = cs.class_of(gamma.letter(lvl));
    for (int i : cs.classes[std::size_t(cls)])
      recy(lvl + 1, lo + len * ifs.dy(i), len * ifs.b(i));
  };
  recy(0, 0.0, 1.0);
  if (xs.empty() || ys.empty())
    throw EmptyCloud("product_approx produced no points");

  if ((std::int64_t)xs.size() * (std::int64_t)ys.size() > budget)
    throw BudgetExceeded("product_approx: product cloud exceeds the budget");
  PointCloud cloud;
  cloud.resolution = resolution;
  cloud.points.reserve(xs.size() * ys.size());
  for (double x : xs)
    for (double y : ys)
      cloud.points.emplace_back(x, y);
  return cloud;
}

double p_hausdorff(const PointCloud &from, const PointCloud &to) {
  if (from.points.empty() || to.points.empty())
    throw EmptyCloud("hausdorff distance needs nonempty clouds");
  const PointGrid grid(to.points);
  double worst = 0.0;
  const long long n = (long long)from.points.size();
#pragma omp parallel for schedule(static) reduction(max : worst) if (use_omp)
  for (long long i = 0; i < n; ++i)
    worst = std::max(worst,
                     grid.nearest(from.points[std::size_t(i)].first,
                                  from.points[std::size_t(i)].second));
  return worst;
}

double p_hausdorff_reference(const PointCloud &from, const PointCloud &to) {
  if (from.points.empty() || to.points.empty())
    throw EmptyCloud("hausdorff distance needs nonempty clouds");
  double worst = 0.0;
  for (const auto &[ax, ay] : from.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &[bx, by] : to.points)
      best = std::min(best, std::hypot(ax - bx, ay - by));
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff_distance(const PointCloud &a, const PointCloud &b) {
  return std::max(p_hausdorff(a, b), p_hausdorff(b, a));
}

} // namespace carpets
