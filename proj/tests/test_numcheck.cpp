#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "support/generators.hpp"
#include "supersmooth/construct.hpp"
#include "supersmooth/errors.hpp"
#include "supersmooth/numcheck.hpp"

using namespace supersmooth;

TEST_SUITE("numcheck") {
  TEST_CASE("config validation") {
    NumericConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.base_step = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.richardson_levels = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.tolerance = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }

  TEST_CASE("one-sided derivative examples") {
    const NumericConfig cfg;
    const auto a = one_sided_directional_derivative([](double, double y) { return y * y; }, {0, 0}, {0, 1}, cfg);
    CHECK(std::abs(a.estimate) <= cfg.tolerance);
    const auto b = one_sided_directional_derivative([](double x, double y) { return std::sin(x + y); }, {0, 0}, {1, 0}, cfg);
    CHECK(std::abs(b.estimate - 1.0) <= 1e-8);
    const auto c = one_sided_directional_derivative([](double, double y) { return std::abs(y); }, {0, 0}, {0, 1}, cfg);
    CHECK(std::abs(c.estimate - 1.0) <= 1e-8);
    // scale of v does not matter
    const auto d = one_sided_directional_derivative([](double x, double y) { return std::sin(x + y); }, {0, 0}, {5, 0}, cfg);
    CHECK(std::abs(d.estimate - 1.0) <= 1e-8);
  }

  TEST_CASE("raw stencil is second order") {
    const ScalarField f = [](double x, double y) { return std::sin(x + y); };
    NumericConfig cfg;
    cfg.richardson_levels = 1;
    cfg.base_step = 1e-2;
    const auto coarse = one_sided_directional_derivative(f, {0.3, -0.1}, {1, 0}, cfg);
    cfg.base_step = 5e-3;
    const auto fine = one_sided_directional_derivative(f, {0.3, -0.1}, {1, 0}, cfg);
    const double exact = std::cos(0.2);
    const double ratio = std::abs(coarse.estimate - exact) / std::abs(fine.estimate - exact);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
    CHECK(std::isinf(fine.error_estimate));
  }

  TEST_CASE("each Richardson level removes one more error term") {
    const ScalarField quartic = [](double x, double) { return x * x * x * x; };
    NumericConfig cfg;
    cfg.richardson_levels = 2;
    const double two = std::abs(one_sided_directional_derivative(quartic, {0.5, 0}, {1, 0}, cfg).estimate - 0.5);
    cfg.richardson_levels = 3;
    const double three = std::abs(one_sided_directional_derivative(quartic, {0.5, 0}, {1, 0}, cfg).estimate - 0.5);
    CHECK(two > 1e-9);
    CHECK(three < 1e-11);
  }

  TEST_CASE("agrees with exact directional derivatives of polynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const NumericConfig cfg;
    for (int trial = 0; trial < 50; ++trial) {
      const auto deg = static_cast<unsigned>(supersmooth::testing::uniform_int(rng, 0, 4));
      const BiPoly p = supersmooth::testing::random_poly(rng, deg, 5);
      const Point2 at{unit(rng), unit(rng)};
      Point2 v{unit(rng), unit(rng)};
      if (std::hypot(v.x, v.y) < 0.1) v = {1.0, 0.5};
      const double len = std::hypot(v.x, v.y);
      const double want = (v.x * evaluate(partial_derivative(p, 1, 0), at.x, at.y) +
                           v.y * evaluate(partial_derivative(p, 0, 1), at.x, at.y)) / len;
      const ScalarField f = [&p](double x, double y) { return evaluate(p, x, y); };
      CHECK(std::abs(one_sided_directional_derivative(f, at, v, cfg).estimate - want) <= 1e-8);
      CHECK(std::abs(central_directional_derivative(f, at, v, cfg).estimate - want) <= 1e-8);
    }
  }

  TEST_CASE("non-finite values are reported") {
    const NumericConfig cfg;
    const ScalarField bad = [](double x, double) { return x > 0 ? std::numeric_limits<double>::quiet_NaN() : 0.0; };
    CHECK_THROWS_AS(one_sided_directional_derivative(bad, {0, 0}, {1, 0}, cfg), EvaluationError);
    const ScalarField inf = [](double, double) { return std::numeric_limits<double>::infinity(); };
    CHECK_THROWS_AS(central_directional_derivative(inf, {0, 0}, {1, 0}, cfg), EvaluationError);
  }

  TEST_CASE("ray lemma examples") {
    const NumericConfig cfg;
    const ScalarField x2 = [](double x, double) { return x * x; };
    CHECK(verify_ray_lemma(x2, [](double x, double y) { return x * x + x * y; }, {1, 0}, cfg).pass);
    CHECK(verify_ray_lemma(x2, [](double x, double y) { return x * x + y; }, {1, 0}, cfg).pass);
    const auto same = verify_ray_lemma(x2, x2, {1, 0}, cfg);
    CHECK(same.pass);
    CHECK(same.max_value_gap == 0.0);
    CHECK(same.max_dirderiv_gap == 0.0);
    CHECK_FALSE(verify_ray_lemma(x2, [](double x, double) { return x * x + x; }, {1, 0}, cfg).pass);
  }

  TEST_CASE("corner gradient examples") {
    const NumericConfig cfg;
    const auto corner = verify_corner_gradient(find_numeric_fixture("corner-quadratic")->gluing.value(), cfg);
    CHECK(corner.pass);
    CHECK(corner.grad_gap <= 1e-6);
    CHECK(std::abs(corner.grad_upper[0]) <= 1e-6);
    CHECK(std::abs(corner.grad_upper[1]) <= 1e-6);

    const auto smooth = verify_corner_gradient(find_numeric_fixture("smooth-parabola")->gluing.value(), cfg);
    CHECK_FALSE(smooth.pass);
    CHECK(smooth.continuity_gap <= 1e-6);
    CHECK(smooth.grad_gap == doctest::Approx(1.0).epsilon(1e-6));

    const ScalarField lin = [](double x, double y) { return x + y; };
    const auto single = verify_corner_gradient(CurveGluing{[](double x) { return std::sin(x); }, 0.2, lin, lin}, cfg);
    CHECK(single.pass);
  }

  TEST_CASE("corner-quadratic passes at every tolerance from 1e-7") {
    const auto& cg = find_numeric_fixture("corner-quadratic")->gluing.value();
    for (double tol : {1e-7, 1e-6, 1e-5, 1e-3, 1e-1}) {
      NumericConfig cfg;
      cfg.tolerance = tol;
      CHECK(verify_corner_gradient(cg, cfg).pass);
    }
  }

  TEST_CASE("witness examples") {
    const NumericConfig cfg;
    const auto w = corner_witness_check([](double x, double y) { return y - x * x; }, [](double x) { return x * x; }, 0.0, cfg);
    CHECK(w.vanishes_on_curve);
    CHECK(w.is_witness);
    CHECK(w.grad_norm_at_p == doctest::Approx(1.0).epsilon(1e-6));

    const auto c = corner_witness_check([](double x, double y) { return y * y - x * x; }, [](double x) { return std::abs(x); }, 0.0, cfg);
    CHECK(c.vanishes_on_curve);
    CHECK_FALSE(c.is_witness);
    CHECK(c.grad_norm_at_p <= 1e-6);

    const auto one = corner_witness_check([](double, double) { return 1.0; }, [](double x) { return x; }, 0.0, cfg);
    CHECK_FALSE(one.vanishes_on_curve);
    CHECK(one.invalid_candidate);
    CHECK_FALSE(one.is_witness);
  }

  TEST_CASE("gradient check and witness check agree on fixtures") {
    const NumericConfig cfg;
    int checked = 0;
    for (const auto& fx : numeric_fixtures()) {
      if (!fx.gluing || !fx.witness) continue;
      const auto grad = verify_corner_gradient(*fx.gluing, cfg);
      const auto wit = corner_witness_check(*fx.witness, fx.gluing->g, fx.gluing->corner_x, cfg);
      CAPTURE(fx.name);
      CHECK(wit.vanishes_on_curve);
      // A mismatched glue needs a smooth curve; a corner allows no witness.
      if (!grad.pass) CHECK(wit.is_witness);
      if (!wit.is_witness) CHECK(grad.pass);
      ++checked;
    }
    CHECK(checked >= 2);
  }

  TEST_CASE("ray fixtures pass") {
    const NumericConfig cfg;
    for (const auto& fx : numeric_fixtures()) {
      for (const auto& rc : fx.ray_cases) {
        CAPTURE(rc.label);
        CHECK(verify_ray_lemma(rc.f, rc.g, rc.ray, cfg).pass);
      }
    }
  }

  TEST_CASE("piecewise fields from splines glue along every ray") {
    const NumericConfig cfg;
    const std::vector<Rational> slopes{1, 2, 3};
    const auto field = PiecewiseField::from_spline(build_counterexample(slopes, 2).spline);
    CHECK(field(1.0, -0.5) == 0.0);
    for (const auto& r : verify_ray_gluing(field, cfg)) CHECK(r.pass);
    CHECK_THROWS_AS(PiecewiseField(build_fan({Ray(1, 0), Ray(-1, 0)}), {}), ArityError);
  }
}
