#include "supersmooth/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "supersmooth/errors.hpp"
#include "supersmooth/matrix.hpp"

namespace supersmooth {

std::vector<Rational> counterexample_coeffs(std::span<const Rational> slopes, unsigned n) {
  if (n == 0) throw Unsupported("n = 0 has no counterexample construction");
  if (slopes.size() != n + 1) {
    throw InvalidSlopes("expected " + std::to_string(n + 1) + " slopes, got " +
                        std::to_string(slopes.size()));
  }
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (slopes[i].is_zero()) throw InvalidSlopes("slope 0 coincides with the x-axis ray");
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      if (slopes[i] == slopes[j]) throw InvalidSlopes("duplicate slope " + slopes[i].str());
    }
  }
  RatMatrix system(n, n + 1);
  for (unsigned s = 1; s <= n; ++s) {
    for (std::size_t i = 0; i <= n; ++i) system(s - 1, i) = slopes[i].pow(s);
  }
  const auto kernel = nullspace(system);
  if (kernel.size() != 1) {
    throw std::logic_error("Vandermonde-type system on distinct nonzero nodes must have a 1-dim kernel");
  }
  return kernel.front();
}

Ray lower_ray_for_slope(const Rational& a) {
  if (a.is_zero()) throw InvalidSlopes("slope 0 has no ray in the open lower half-plane");
  // Direction (1, -a) when it points down, (-1, a) otherwise.
  return a.sign() > 0 ? Ray(Rational(1), -a) : Ray(Rational(-1), a);
}

CounterexampleSpec build_counterexample(std::span<const Rational> slopes, unsigned n) {
  // Validate before building rays so bad input reports InvalidSlopes.
  counterexample_coeffs(slopes, n);

  std::vector<Ray> rays{Ray(Rational(1), Rational(0))};
  for (const auto& a : slopes) rays.push_back(lower_ray_for_slope(a));
  FanPartition fan = build_fan(rays);

  std::vector<Rational> ordered;
  for (std::size_t j = 1; j < fan.size(); ++j) {
    const auto it = std::find_if(slopes.begin(), slopes.end(), [&](const Rational& a) {
      return lower_ray_for_slope(a) == fan.ray(j);
    });
    ordered.push_back(*it);
  }
  std::vector<Rational> coeffs = counterexample_coeffs(ordered, n);

  std::vector<BiPoly> pieces{BiPoly()};
  BiPoly running;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    running += poly_scale(linear_form_power(ordered[i], n), coeffs[i]);
    pieces.push_back(running);
  }
  CounterexampleSpec out{n, std::move(ordered), std::move(coeffs),
                         PiecewisePoly(std::move(fan), std::move(pieces))};

  const auto expected = SmoothOrder::finite(static_cast<int>(n) - 1);
  if (global_smoothness_order(out.spline) != expected ||
      origin_smoothness_order(out.spline) != expected) {
    throw std::logic_error("counterexample construction lost its defining orders");
  }
  return out;
}

std::vector<Ray> default_halfplane_rays(unsigned n) {
  std::vector<Ray> out;
  for (unsigned i = 0; i < n; ++i) out.emplace_back(Rational(i), Rational(1));
  return out;
}

PiecewisePoly build_halfplane_example(unsigned n, std::span<const Ray> extra_rays) {
  if (extra_rays.size() != n) {
    throw InvalidRay("expected " + std::to_string(n) + " extra rays, got " +
                     std::to_string(extra_rays.size()));
  }
  std::vector<Ray> rays{Ray(Rational(1), Rational(0)), Ray(Rational(-1), Rational(0))};
  for (const auto& r : extra_rays) {
    if (r.dy().is_zero()) throw InvalidRay("extra ray " + r.str() + " lies on the x-axis");
    rays.push_back(r);
  }
  FanPartition fan = build_fan(std::move(rays));

  const BiPoly upper = poly_pow(BiPoly::y(), n + 1);
  std::vector<BiPoly> pieces;
  const std::size_t k = fan.size();
  for (std::size_t j = 0; j < k; ++j) {
    const Ray& a = fan.ray(j);
    const Ray& b = fan.ray((j + 1) % k);
    // An interior direction of the clockwise sweep a -> b (never wider than a
    // half-plane here because both x-axis rays are present).
    const Rational c = cross(a, b);
    const Rational inner_dy = c.sign() < 0 ? a.dy() + b.dy() : -a.dx();
    pieces.push_back(inner_dy.sign() > 0 ? upper : BiPoly());
  }
  return PiecewisePoly(std::move(fan), std::move(pieces));
}

}  // namespace supersmooth
