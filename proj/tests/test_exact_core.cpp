#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "supersmooth/errors.hpp"
#include "supersmooth/matrix.hpp"
#include "supersmooth/poly.hpp"

using namespace supersmooth;
using supersmooth::testing::random_poly;
using supersmooth::testing::random_ray;
using supersmooth::testing::random_rational;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly terms(std::initializer_list<std::tuple<unsigned, unsigned, long>> list) {
  BiPoly::TermMap m;
  for (const auto& [i, j, c] : list) m.emplace(Monomial{i, j}, Rational(c));
  return BiPoly(std::move(m));
}

bool canonical(const Rational& r) {
  mpz_class g;
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return den > 0 && g == 1 && (!r.is_zero() || den == 1);
}

}  // namespace

TEST_SUITE("exact_core") {
  TEST_CASE("rational text form") {
    CHECK(Rational::parse("-3/4").str() == "-3/4");
    CHECK(Rational::parse("6/8").str() == "3/4");
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("-0").str() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/3"), ParseError);
  }

  TEST_CASE("rational stays canonical under arithmetic") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
      const Rational a = random_rational(rng, 50, 30);
      const Rational b = random_rational(rng, 50, 30);
      for (const Rational& r : {a + b, a - b, a * b, -a, a.pow(3), a.abs()}) CHECK(canonical(r));
      if (!b.is_zero()) {
        CHECK(canonical(a / b));
        CHECK(canonical(b.inverse()));
      }
      CHECK(Rational::parse(a.str()) == a);
    }
  }

  TEST_CASE("poly_arith examples") {
    CHECK(poly_arith(X + Y, X - Y, ArithKind::mul) == terms({{2, 0, 1}, {0, 2, -1}}));
    CHECK(poly_pow(Y + poly_scale(X, 2), 2) == terms({{0, 2, 1}, {1, 1, 4}, {2, 0, 4}}));
    std::mt19937_64 rng(3);
    const BiPoly a = random_poly(rng, 3);
    CHECK(poly_arith(a, a, ArithKind::sub).is_zero());
    CHECK(poly_arith(a, a, ArithKind::sub).terms().empty());
    CHECK(poly_pow(a, 0) == BiPoly(Rational(1)));
    CHECK(poly_scale(a, Rational(0)).is_zero());
  }

  TEST_CASE("partial_derivative examples") {
    CHECK(partial_derivative(terms({{2, 1, 1}}), 1, 0) == terms({{1, 1, 2}}));
    CHECK(partial_derivative(BiPoly(Rational(7)), 1, 0).is_zero());
    // d^2/dx dy (y + 2x)^3 = 3!/1! * 2^1 * (y + 2x) = 12y + 24x
    CHECK(partial_derivative(poly_pow(Y + poly_scale(X, 2), 3), 1, 1) == terms({{0, 1, 12}, {1, 0, 24}}));
  }

  TEST_CASE("partial of a linear-form power matches n!/(n-k)! a^j l^(n-k)") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const Rational a = random_rational(rng);
      const unsigned n = static_cast<unsigned>(supersmooth::testing::uniform_int(rng, 0, 6));
      const unsigned k = static_cast<unsigned>(supersmooth::testing::uniform_int(rng, 0, static_cast<int>(n)));
      const unsigned j = static_cast<unsigned>(supersmooth::testing::uniform_int(rng, 0, static_cast<int>(k)));
      const BiPoly expected = poly_scale(poly_pow(Y + poly_scale(X, a), n - k),
                                         factorial(n) / factorial(n - k) * a.pow(j));
      CHECK(partial_derivative(linear_form_power(a, n), j, k - j) == expected);
    }
  }

  TEST_CASE("directional_derivative examples") {
    CHECK(directional_derivative(X * Y, Ray(1, 1)) == X + Y);
    CHECK(directional_derivative(poly_pow(Y, 3), Ray(0, 1)) == terms({{0, 2, 3}}));
    // (1,-2) is tangent to y + 2x = 0. Hand expansions for n = 1, 2, 3:
    const BiPoly l1 = terms({{0, 1, 1}, {1, 0, 2}});
    const BiPoly l2 = terms({{0, 2, 1}, {1, 1, 4}, {2, 0, 4}});
    const BiPoly l3 = terms({{0, 3, 1}, {1, 2, 6}, {2, 1, 12}, {3, 0, 8}});
    for (const BiPoly& p : {l1, l2, l3}) CHECK(directional_derivative(p, Ray(1, -2)).is_zero());
    CHECK_THROWS_AS(Ray(0, 0), InvalidDirection);
  }

  TEST_CASE("restrict_to_ray examples") {
    CHECK(restrict_to_ray(Y * Y - X * X, Ray(1, 1)).is_zero());
    CHECK(restrict_to_ray(X * Y, Ray(2, 1)) == UniPoly({0, 0, 2}));
    CHECK(restrict_to_ray(poly_pow(Y + poly_scale(X, 2), 3), Ray(1, -2)).is_zero());
    CHECK(UniPoly({1, 2, 0, 0}).degree() == 1);
  }

  TEST_CASE("linear_form_power examples") {
    CHECK(linear_form_power(2, 2) == terms({{0, 2, 1}, {1, 1, 4}, {2, 0, 4}}));
    CHECK(linear_form_power(Rational::parse("-5/3"), 0) == BiPoly(Rational(1)));
    CHECK(linear_form_power(1, 3) == terms({{0, 3, 1}, {1, 2, 3}, {2, 1, 3}, {3, 0, 1}}));
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
      const Rational a = random_rational(rng);
      const unsigned n = static_cast<unsigned>(supersmooth::testing::uniform_int(rng, 0, 7));
      CHECK(linear_form_power(a, n) == poly_pow(Y + poly_scale(X, a), n));
    }
  }

  TEST_CASE("evaluate examples") {
    CHECK(evaluate(terms({{0, 2, 1}, {1, 1, 4}, {2, 0, 4}}), Rational(1), Rational(-2)) == Rational(0));
    CHECK(evaluate(X + Y, Rational(0), Rational(0)) == Rational(0));
    CHECK(evaluate(terms({{2, 0, 3}, {0, 1, -1}}), Rational::parse("1/2"), Rational::parse("1/4")) ==
          Rational::parse("1/2"));
  }

  TEST_CASE("directional derivatives commute") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
      const BiPoly p = random_poly(rng, 5);
      const Ray u = random_ray(rng);
      const Ray v = random_ray(rng);
      CHECK(directional_derivative(directional_derivative(p, u), v) ==
            directional_derivative(directional_derivative(p, v), u));
    }
  }

  TEST_CASE("chain rule along a ray") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
      const BiPoly p = random_poly(rng, 5);
      const Ray v = random_ray(rng);
      CHECK(restrict_to_ray(directional_derivative(p, v), v) == restrict_to_ray(p, v).derivative());
    }
  }

  TEST_CASE("nullspace and rank examples") {
    CHECK(nullspace(RatMatrix::from_rows({{1, 2}})) == std::vector<RatVector>{{2, -1}});
    CHECK(nullspace(RatMatrix::from_rows({{1, 0}, {0, 1}})).empty());
    const RatMatrix m = RatMatrix::from_rows({{1, 2, 3}, {1, 4, 9}});
    CHECK(rank(m) == 2);
    CHECK(nullspace(m) == std::vector<RatVector>{{3, -3, 1}});
    CHECK(m.multiply({3, -3, 1}) == RatVector{0, 0});
    CHECK(rank(RatMatrix(3, 4)) == 0);
    CHECK(nullspace(RatMatrix(0, 3)).size() == 3);
    CHECK_THROWS_AS(RatMatrix(2, 2, {1, 2, 3}), std::invalid_argument);
  }

  TEST_CASE("nullspace property on random matrices") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = static_cast<std::size_t>(supersmooth::testing::uniform_int(rng, 1, 6));
      const auto cols = static_cast<std::size_t>(supersmooth::testing::uniform_int(rng, 1, 7));
      std::vector<RatVector> data(rows, RatVector(cols));
      std::vector<std::vector<mpq_class>> copy(rows, std::vector<mpq_class>(cols));
      // Sparse-ish entries make rank deficiency common.
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          const int v = supersmooth::testing::uniform_int(rng, 0, 2) == 0
                            ? 0
                            : supersmooth::testing::uniform_int(rng, -9, 9);
          data[r][c] = v;
          copy[r][c] = v;
        }
      }
      const RatMatrix m = RatMatrix::from_rows(data);
      const auto basis = nullspace(m);
      const std::size_t rk = rank(m);
      CHECK(rk == supersmooth::testing::oracle_rank(copy));
      CHECK(rk + basis.size() == cols);
      for (const auto& w : basis) {
        for (const auto& v : m.multiply(w)) CHECK(v.is_zero());
        const auto first = std::find_if(w.begin(), w.end(), [](const Rational& q) { return !q.is_zero(); });
        REQUIRE(first != w.end());
        CHECK(first->sign() > 0);
        for (const auto& q : w) CHECK(q.is_integer());
      }
      // Basis vectors are independent.
      if (!basis.empty()) CHECK(rank(RatMatrix::from_rows(basis)) == basis.size());
    }
  }
}
