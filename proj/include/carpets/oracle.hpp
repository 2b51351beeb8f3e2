#pragma once

#include <cstdint>
#include <vector>

#include "carpets/carpet.hpp"
#include "carpets/sequence.hpp"

namespace carpets {

struct Rect {
  double x = 0.0, y = 0.0, w = 0.0, h = 0.0;
};

// Finite cylinder approximation of the attractor: images of [0,1]² under all
// depth-fold compositions, in lexicographic word order.
struct RectCover {
  std::vector<Rect> rects;
  int depth = 0;
};

struct PointCloud {
  std::vector<std::pair<double, double>> points;
  double resolution = 0.0;
};

RectCover cylinder_cover(const DiagonalIFS &ifs, int depth,
                         std::int64_t budget = 10000000);

// Number of δ-grid cells meeting the depth-n cylinder cover. depth < 0 picks
// the smallest depth whose rectangles have diameter ≤ δ/2.
long long box_count(const DiagonalIFS &ifs, double delta, int depth = -1,
                    std::int64_t budget = 10000000);
// Serial reference for the (possibly OpenMP-parallel) kernel above.
long long box_count_reference(const DiagonalIFS &ifs, double delta, int depth = -1,
                              std::int64_t budget = 10000000);

// Grid count of K ∩ B(π(γ), R) at mesh r, from a depth-n cover.
long long local_count(const DiagonalIFS &ifs, const SequenceSpec &gamma, double R, double r,
                      int depth, std::int64_t budget = 10000000);

// Coordinates of π(γ), by iterating prefix maps until the prefix rectangle
// has diameter below `resolution`.
std::pair<double, double> symbolic_point(const DiagonalIFS &ifs, const SequenceSpec &gamma,
                                         double resolution);

// Magnified window Φ_{n,γ}(K) ∩ [0,1]²: x rescaled through the depth-L_n(γ)
// axis-1 prefix, y through the depth-n axis-2 prefix.
PointCloud tangent_approx(const DiagonalIFS &ifs, const SequenceSpec &gamma, int n,
                          double resolution, std::int64_t budget = 10000000);

// The limiting product η(K) × (rescaled fibre window) at the same depth.
PointCloud product_approx(const DiagonalIFS &ifs, const SequenceSpec &gamma, int n,
                          double resolution, std::int64_t budget = 10000000);

// One-sided and symmetric discrete Hausdorff distances between point clouds.
double p_hausdorff(const PointCloud &from, const PointCloud &to);
double p_hausdorff_reference(const PointCloud &from, const PointCloud &to);
double hausdorff_distance(const PointCloud &a, const PointCloud &b);

} // namespace carpets
