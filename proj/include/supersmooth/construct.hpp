#pragma once

#include <span>
#include <vector>

#include "supersmooth/rational.hpp"
#include "supersmooth/spline.hpp"

namespace supersmooth {

/// Canonical counterexample spline: C^(n-1) on the whole plane but with an
/// order-n partial that jumps at the origin.
struct CounterexampleSpec {
  unsigned n = 0;
  std::vector<Rational> slopes;  // a_2..a_{n+2}, in clockwise ray order
  std::vector<Rational> coeffs;  // c_2..c_{n+2}, primitive integers
  PiecewisePoly spline;
};

/// Primitive integer null vector (c_i) of sum_i c_i a_i^s = 0, s = 1..n.
/// Throws InvalidSlopes if |slopes| != n+1 or slopes repeat or vanish, and
/// Unsupported for n = 0.
std::vector<Rational> counterexample_coeffs(std::span<const Rational> slopes, unsigned n);

/// Ray on the line y = -a x lying in the open lower half-plane.
Ray lower_ray_for_slope(const Rational& a);

/// Rays (1,0) and lower_ray_for_slope(a_i), sorted clockwise; pieces f_1 = 0
/// and f_k = sum_{i=2}^k c_i (y + a_i x)^n. Slopes are reordered to follow the
/// fan. The global and origin orders are checked to be exactly n-1 before
/// returning.
CounterexampleSpec build_counterexample(std::span<const Rational> slopes, unsigned n);

/// Fan of (1,0), (-1,0) and the extra rays; y^(n+1) on upper sectors and 0
/// on lower ones. Throws InvalidRay for an extra ray on the x-axis or a count
/// other than n, and DuplicateRay for repeated rays.
PiecewisePoly build_halfplane_example(unsigned n, std::span<const Ray> extra_rays);

/// Extra rays used when none are given: (i, 1) for i = 0..n-1.
std::vector<Ray> default_halfplane_rays(unsigned n);

}  // namespace supersmooth
