#pragma once

#include <iosfwd>
#include <string>

#include "supersmooth/rational.hpp"

namespace supersmooth {

/// Oriented direction from the origin.
///
/// Stored as the primitive integer vector pointing the same way: (2/3, -4/3)
/// becomes (1, -2). Orientation is kept, so (1, 0) and (-1, 0) differ.
class Ray {
 public:
  /// Throws InvalidDirection for (0, 0).
  Ray(const Rational& dx, const Rational& dy);

  const Rational& dx() const { return dx_; }
  const Rational& dy() const { return dy_; }
  std::string str() const;

  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  Rational dx_;
  Rational dy_;
};

std::ostream& operator<<(std::ostream& os, const Ray& ray);

/// dx_a * dy_b - dy_a * dx_b.
Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by);
inline Rational cross(const Ray& a, const Ray& b) { return cross(a.dx(), a.dy(), b.dx(), b.dy()); }

}  // namespace supersmooth
