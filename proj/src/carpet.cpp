#include "carpets/carpet.hpp"

#include <algorithm>
#include <cmath>

#include "carpets/errors.hpp"

namespace carpets {

namespace {

constexpr double kTol = 1e-12;

bool same_projected_map(const DiagonalIFS &ifs, int i, int j, int axis) {
  const AffineMap &mi = ifs.maps[i];
  const AffineMap &mj = ifs.maps[j];
  if (axis == 1)
    return mi.a.same(mj.a) && mi.dx.same(mj.dx);
  return mi.b.same(mj.b) && mi.dy.same(mj.dy);
}

// Overlap length of two closed intervals.
double interval_overlap(double lo1, double hi1, double lo2, double hi2) {
  return std::min(hi1, hi2) - std::max(lo1, lo2);
}

} // namespace

std::string to_string(CarpetKind k) {
  switch (k) {
  case CarpetKind::GatzourasLalley:
    return "GatzourasLalley";
  case CarpetKind::Baranski:
    return "Baranski";
  default:
    return "Neither";
  }
}

ClassificationReport validate_and_classify(const DiagonalIFS &ifs) {
  if (ifs.size() < 2)
    throw InvalidMap("a diagonal IFS needs at least two maps");
  for (int i = 0; i < ifs.size(); ++i) {
    const auto &m = ifs.maps[i];
    if (!(m.a.value > 0.0 && m.a.value < 1.0 && m.b.value > 0.0 && m.b.value < 1.0))
      throw InvalidMap("contraction ratio outside (0,1) at map " + std::to_string(i));
    if (m.dx.value < -kTol || m.dy.value < -kTol || m.dx.value + m.a.value > 1.0 + kTol ||
        m.dy.value + m.b.value > 1.0 + kTol)
      throw InvalidMap("image rectangle leaves [0,1]^2 at map " + std::to_string(i));
  }

  ClassificationReport rep;

  rep.interiors_disjoint = true;
  for (int i = 0; i < ifs.size() && rep.interiors_disjoint; ++i)
    for (int j = i + 1; j < ifs.size(); ++j) {
      const double ox = interval_overlap(ifs.dx(i), ifs.dx(i) + ifs.a(i), ifs.dx(j),
                                         ifs.dx(j) + ifs.a(j));
      const double oy = interval_overlap(ifs.dy(i), ifs.dy(i) + ifs.b(i), ifs.dy(j),
                                         ifs.dy(j) + ifs.b(j));
      if (ox > kTol && oy > kTol) {
        rep.interiors_disjoint = false;
        break;
      }
    }

  auto aligned_or_disjoint = [&](int axis) {
    for (int i = 0; i < ifs.size(); ++i)
      for (int j = i + 1; j < ifs.size(); ++j) {
        if (same_projected_map(ifs, i, j, axis))
          continue;
        const double o =
            interval_overlap(ifs.trans(i, axis), ifs.trans(i, axis) + ifs.ratio(i, axis),
                             ifs.trans(j, axis), ifs.trans(j, axis) + ifs.ratio(j, axis));
        if (o > kTol)
          return false;
      }
    return true;
  };
  rep.columns_aligned_or_disjoint_axis1 = aligned_or_disjoint(1);
  rep.columns_aligned_or_disjoint_axis2 = aligned_or_disjoint(2);

  rep.strict_domination = true;
  for (int i = 0; i < ifs.size(); ++i)
    if (!(ifs.a(i) > ifs.b(i))) {
      rep.strict_domination = false;
      break;
    }

  auto proj_ssc = [&](int axis) {
    const ColumnStructure cs = column_structure(ifs, axis);
    for (std::size_t c = 0; c < cs.classes.size(); ++c)
      for (std::size_t d = c + 1; d < cs.classes.size(); ++d) {
        const double o = interval_overlap(cs.class_trans[c], cs.class_trans[c] + cs.class_ratio[c],
                                          cs.class_trans[d], cs.class_trans[d] + cs.class_ratio[d]);
        // SSC demands pairwise-disjoint *closed* intervals: touching fails.
        if (o > -kTol)
          return false;
      }
    return true;
  };
  rep.proj_ssc_axis1 = proj_ssc(1);
  rep.proj_ssc_axis2 = proj_ssc(2);

  if (rep.interiors_disjoint && rep.columns_aligned_or_disjoint_axis1 && rep.strict_domination)
    rep.kind = CarpetKind::GatzourasLalley;
  else if (rep.interiors_disjoint && rep.columns_aligned_or_disjoint_axis1 &&
           rep.columns_aligned_or_disjoint_axis2)
    rep.kind = CarpetKind::Baranski;
  else
    rep.kind = CarpetKind::Neither;
  return rep;
}

ColumnStructure column_structure(const DiagonalIFS &ifs, int axis) {
  if (axis != 1 && axis != 2)
    throw DomainError("axis must be 1 or 2");
  ColumnStructure cs;
  cs.axis = axis;
  for (int i = 0; i < ifs.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < cs.classes.size() && !placed; ++c)
      if (same_projected_map(ifs, cs.classes[c][0], i, axis)) {
        cs.classes[c].push_back(i);
        placed = true;
      }
    if (!placed) {
      cs.classes.push_back({i});
      cs.class_ratio.push_back(ifs.ratio(i, axis));
      cs.class_trans.push_back(ifs.trans(i, axis));
    }
  }
  // Deterministic class order: by leftmost translation, then ratio.
  std::vector<std::size_t> order(cs.classes.size());
  for (std::size_t c = 0; c < order.size(); ++c)
    order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
    if (cs.class_trans[u] != cs.class_trans[v])
      return cs.class_trans[u] < cs.class_trans[v];
    return cs.class_ratio[u] < cs.class_ratio[v];
  });
  ColumnStructure out;
  out.axis = axis;
  for (std::size_t c : order) {
    out.classes.push_back(cs.classes[c]);
    out.class_ratio.push_back(cs.class_ratio[c]);
    out.class_trans.push_back(cs.class_trans[c]);
  }
  return out;
}

} // namespace carpets
