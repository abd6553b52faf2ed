#include "supersmooth/fan.hpp"

#include <algorithm>

#include "supersmooth/errors.hpp"

namespace supersmooth {

bool are_collinear(const Ray& a, const Ray& b) { return cross(a, b).is_zero(); }

int ClockwiseFrom::half(const Rational& x, const Rational& y) const {
  const int c = cross(ref_.dx(), ref_.dy(), x, y).sign();
  if (c < 0) return 1;
  if (c > 0) return 3;
  const Rational dot = ref_.dx() * x + ref_.dy() * y;
  return dot.sign() > 0 ? 0 : 2;
}

bool ClockwiseFrom::operator()(const Rational& ax, const Rational& ay, const Rational& bx,
                               const Rational& by) const {
  const int ha = half(ax, ay);
  const int hb = half(bx, by);
  if (ha != hb) return ha < hb;
  // Same half: a comes first iff b is clockwise of a.
  return cross(ax, ay, bx, by).sign() < 0;
}

FanPartition build_fan(std::vector<Ray> rays) {
  if (rays.size() < 2) throw FanSizeError("a fan needs at least 2 rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (rays[i] == rays[j]) throw DuplicateRay("duplicate ray " + rays[i].str());
    }
  }
  const ClockwiseFrom order(rays.front());
  std::stable_sort(rays.begin() + 1, rays.end(), order);

  FanPartition fan;
  fan.rays_ = std::move(rays);
  for (std::size_t i = 0; i < fan.rays_.size() && fan.collinear_free_; ++i) {
    for (std::size_t j = i + 1; j < fan.rays_.size(); ++j) {
      if (are_collinear(fan.rays_[i], fan.rays_[j])) {
        fan.collinear_free_ = false;
        break;
      }
    }
  }
  return fan;
}

std::size_t locate_sector(const FanPartition& fan, const Rational& x, const Rational& y) {
  if (x.is_zero() && y.is_zero()) throw OriginHasNoSector("the origin belongs to no sector");
  const ClockwiseFrom order(fan.ray(0));
  // Last ray not strictly clockwise of the point.
  const auto& rays = fan.rays();
  const auto it = std::upper_bound(
      rays.begin(), rays.end(), 0,
      [&](int, const Ray& r) { return order(x, y, r.dx(), r.dy()); });
  return static_cast<std::size_t>(it - rays.begin()) - 1;
}

Decomposition decompose_direction(const Ray& v1, const Ray& v2, const Ray& vj) {
  const Rational det = cross(v2, vj);
  if (det.is_zero()) {
    throw SingularDecomposition("rays " + v2.str() + " and " + vj.str() + " are collinear");
  }
  return {cross(v1, vj) / det, cross(v2, v1) / det};
}

}  // namespace supersmooth
