// Timing comparison of the OpenMP kernels against their serial references:
// grid box counting and one-sided Hausdorff distance between point clouds.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "carpets/examples.hpp"
#include "carpets/oracle.hpp"

using namespace carpets;

namespace {

template <typename F> double time_ms(F &&f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main() {
  const DiagonalIFS ifs = gl_example();

  const double delta = std::pow(2.0, -9);
  long long n_par = 0, n_ser = 0;
  const double t_box_par = time_ms([&] { n_par = box_count(ifs, delta); });
  const double t_box_ser = time_ms([&] { n_ser = box_count_reference(ifs, delta); });
  std::printf("box_count delta=2^-9: parallel %lld in %.1f ms, serial %lld in %.1f ms\n",
              n_par, t_box_par, n_ser, t_box_ser);

  const SequenceSpec gamma = SequenceSpec::constant(0);
  const PointCloud a = tangent_approx(ifs, gamma, 3, 1.0 / 256.0);
  const PointCloud b = product_approx(ifs, gamma, 3, 1.0 / 256.0);
  double d_fast = 0.0, d_ref = 0.0;
  const double t_h_fast = time_ms([&] { d_fast = p_hausdorff(a, b); });
  const double t_h_ref = time_ms([&] { d_ref = p_hausdorff_reference(a, b); });
  std::printf("p_hausdorff %zu vs %zu points: grid %.6g in %.1f ms, brute %.6g in %.1f ms\n",
              a.points.size(), b.points.size(), d_fast, t_h_fast, d_ref, t_h_ref);

  return (n_par == n_ser && d_fast == d_ref) ? 0 : 1;
}
