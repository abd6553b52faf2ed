#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "supersmooth/rational.hpp"
#include "supersmooth/ray.hpp"

namespace supersmooth {

/// True iff a and b lie on one line through the origin (same or opposite
/// direction).
bool are_collinear(const Ray& a, const Ray& b);

/// Rays from the origin in strictly clockwise order starting at rays()[0].
///
/// Sector j is the open region swept clockwise from ray j to ray j+1 (mod k).
/// Fans containing collinear pairs are allowed and flagged.
class FanPartition {
 public:
  const std::vector<Ray>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  const Ray& ray(std::size_t j) const { return rays_[j]; }
  bool collinear_free() const { return collinear_free_; }

  friend bool operator==(const FanPartition&, const FanPartition&) = default;

 private:
  friend FanPartition build_fan(std::vector<Ray> rays);

  std::vector<Ray> rays_;
  bool collinear_free_ = true;
};

/// Sorts rays clockwise starting from the first input ray.
/// Throws FanSizeError for fewer than 2 rays and DuplicateRay for repeated
/// oriented directions.
FanPartition build_fan(std::vector<Ray> rays);

/// Index j with (x, y) in the clockwise sweep [ray j, ray j+1). Points on
/// ray j report j. Throws OriginHasNoSector at (0, 0).
std::size_t locate_sector(const FanPartition& fan, const Rational& x, const Rational& y);

struct Decomposition {
  Rational alpha;
  Rational beta;
};

/// Solves v1 = alpha v2 + beta vj exactly. Throws SingularDecomposition when
/// v2 and vj are collinear.
Decomposition decompose_direction(const Ray& v1, const Ray& v2, const Ray& vj);

/// Strict weak order on nonzero vectors by clockwise angle measured from
/// `reference` (the reference direction itself is smallest).
class ClockwiseFrom {
 public:
  explicit ClockwiseFrom(Ray reference) : ref_(std::move(reference)) {}

  bool operator()(const Rational& ax, const Rational& ay, const Rational& bx,
                  const Rational& by) const;
  bool operator()(const Ray& a, const Ray& b) const {
    return (*this)(a.dx(), a.dy(), b.dx(), b.dy());
  }

 private:
  // 0: along ref, 1: clockwise within (0, pi), 2: opposite, 3: (pi, 2 pi).
  int half(const Rational& x, const Rational& y) const;

  Ray ref_;
};

}  // namespace supersmooth
