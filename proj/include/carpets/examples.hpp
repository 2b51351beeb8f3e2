#pragma once

#include "carpets/carpet.hpp"

namespace carpets {

// Three-map Gatzouras–Lalley reference instance: column A holds two maps
// (a=1/2, b=1/4) stacked at dy=0 and dy=1/2, column B one map (a=1/4, b=1/8)
// at dx=1/2. Used throughout the tests.
DiagonalIFS gl_example();

// Four-quadrant product carpet, a=b=1/2: the attractor is [0,1]².
DiagonalIFS product_carpet();

// The 12-map Barański family parameterized by δ ∈ [0,1/6): β=1/4−δ,
// α₁=1/3−δ, α₂=1/6−δ. One α₁-column of four maps and four α₂-columns of two
// maps each, laid out with uniform gaps gx=(1−α₁−4α₂)/4 between columns and
// gy=(1−4β)/3 between rows, so that at δ=0 the rectangles tile [0,1]² (and
// the projected SSC fails), while for δ>0 both projections satisfy the SSC.
DiagonalIFS baranski_example(double delta);

// Same instance with exact rational entries for δ = num/den.
DiagonalIFS baranski_example(const Rational &delta);

} // namespace carpets
