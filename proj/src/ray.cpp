#include "supersmooth/ray.hpp"

#include <ostream>

#include "supersmooth/errors.hpp"

namespace supersmooth {

Ray::Ray(const Rational& dx, const Rational& dy) {
  if (dx.is_zero() && dy.is_zero()) throw InvalidDirection("zero direction vector");
  // Clear denominators, then divide by the gcd of the numerators.
  mpz_class lcm;
  mpz_lcm(lcm.get_mpz_t(), dx.get().get_den_mpz_t(), dy.get().get_den_mpz_t());
  mpz_class x = dx.get().get_num() * (lcm / dx.get().get_den());
  mpz_class y = dy.get().get_num() * (lcm / dy.get().get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  dx_ = Rational(mpz_class(x / g));
  dy_ = Rational(mpz_class(y / g));
}

std::string Ray::str() const { return "(" + dx_.str() + ", " + dy_.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const Ray& ray) { return os << ray.str(); }

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

}  // namespace supersmooth
