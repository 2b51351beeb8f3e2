#pragma once

#include <string>
#include <vector>

#include "carpets/rational.hpp"

namespace carpets {

// One diagonal affine contraction (x,y) -> (a x + dx, b y + dy).
struct AffineMap {
  Number a, b, dx, dy;
};

struct DiagonalIFS {
  std::vector<AffineMap> maps;

  int size() const { return int(maps.size()); }
  double a(int i) const { return maps[i].a.value; }
  double b(int i) const { return maps[i].b.value; }
  double dx(int i) const { return maps[i].dx.value; }
  double dy(int i) const { return maps[i].dy.value; }
  // Contraction ratio / translation along an axis (1 = horizontal).
  double ratio(int i, int axis) const { return axis == 1 ? a(i) : b(i); }
  double trans(int i, int axis) const { return axis == 1 ? dx(i) : dy(i); }
};

// Partition of the alphabet into η-classes (maps sharing the projected map
// on one axis), ordered by leftmost translation.
struct ColumnStructure {
  int axis = 1;
  std::vector<std::vector<int>> classes;
  std::vector<double> class_ratio;
  std::vector<double> class_trans;

  int class_of(int letter) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int i : classes[c])
        if (i == letter)
          return int(c);
    return -1;
  }
};

enum class CarpetKind { GatzourasLalley, Baranski, Neither };

struct ClassificationReport {
  CarpetKind kind = CarpetKind::Neither;
  bool interiors_disjoint = false;
  bool columns_aligned_or_disjoint_axis1 = false;
  bool columns_aligned_or_disjoint_axis2 = false;
  bool strict_domination = false;
  bool proj_ssc_axis1 = false;
  bool proj_ssc_axis2 = false;

  bool proj_ssc(int axis) const { return axis == 1 ? proj_ssc_axis1 : proj_ssc_axis2; }
};

std::string to_string(CarpetKind k);

// Validates the map list (ratios in (0,1), images inside [0,1]²; throws
// InvalidMap otherwise) and computes the separation flags and kind.
ClassificationReport validate_and_classify(const DiagonalIFS &ifs);

ColumnStructure column_structure(const DiagonalIFS &ifs, int axis);

} // namespace carpets
