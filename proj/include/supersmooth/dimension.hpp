#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "supersmooth/fan.hpp"
#include "supersmooth/matrix.hpp"
#include "supersmooth/spline.hpp"

namespace supersmooth {

/// Coordinates of a spline of degree <= d over a k-ray fan: piece p occupies
/// positions [p * M, (p + 1) * M) with M = (d+1)(d+2)/2, and within a piece
/// monomials run by total degree, then descending power of x.
class SplineLayout {
 public:
  SplineLayout(std::size_t pieces, unsigned degree);

  std::size_t pieces() const { return pieces_; }
  unsigned degree() const { return degree_; }
  std::size_t per_piece() const { return monomials_.size(); }
  std::size_t unknowns() const { return pieces_ * monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t index(std::size_t piece, const Monomial& m) const;

  std::vector<BiPoly> to_pieces(const RatVector& coords) const;

 private:
  std::size_t pieces_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
};

/// Rows stating that every partial of order <= r of each consecutive
/// difference vanishes on the separating ray's line, one row per power of t
/// in the restriction.
RatMatrix smoothness_constraints(const FanPartition& fan, unsigned degree, unsigned smoothness);

struct SplineSpace {
  FanPartition fan;
  unsigned degree = 0;
  unsigned smoothness = 0;
  std::size_t dimension = 0;
  std::vector<RatVector> basis;  // null-space basis in SplineLayout coordinates
};

/// The constraints only couple monomials of equal total degree, so the
/// matrix is block diagonal; rank and kernel are assembled from the blocks.
SplineSpace spline_space(const FanPartition& fan, unsigned degree, unsigned smoothness);

/// k (d+1)(d+2)/2 - rank(constraints).
std::size_t spline_space_dimension(const FanPartition& fan, unsigned degree, unsigned smoothness);

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Random element of the space: basis combination with integer weights drawn
/// uniformly from [-box, box].
PiecewisePoly sample_spline(const SplineSpace& space, std::mt19937_64& rng, int box = 3);

}  // namespace supersmooth
