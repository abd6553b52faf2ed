#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "supersmooth/rational.hpp"
#include "supersmooth/ray.hpp"

namespace supersmooth {

/// Exponent pair (power of x, power of y).
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;

  unsigned degree() const { return x + y; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse bivariate polynomial with exact rational coefficients.
///
/// No stored coefficient is zero; the zero polynomial has no terms.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  BiPoly() = default;
  BiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit BiPoly(TermMap terms);

  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(unsigned xp, unsigned yp, const Rational& coeff = Rational(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest i + j over stored terms; 0 for the zero polynomial.
  unsigned total_degree() const;
  Rational coeff(unsigned xp, unsigned yp) const;
  /// Terms of total degree exactly `degree`.
  BiPoly homogeneous_part(unsigned degree) const;
  bool is_homogeneous() const;

  std::string str() const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly operator-() const;

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(BiPoly lhs, const BiPoly& rhs) { return lhs *= rhs; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

enum class ArithKind { add, sub, mul };

BiPoly poly_arith(const BiPoly& a, const BiPoly& b, ArithKind kind);
BiPoly poly_scale(const BiPoly& a, const Rational& s);
BiPoly poly_pow(const BiPoly& a, unsigned k);

/// d^(x_order + y_order) p / dx^x_order dy^y_order.
BiPoly partial_derivative(const BiPoly& p, unsigned x_order, unsigned y_order);

/// dx * dp/dx + dy * dp/dy with the ray's stored (not unit) components.
BiPoly directional_derivative(const BiPoly& p, const Ray& v);

/// (y + a x)^n.
BiPoly linear_form_power(const Rational& a, unsigned n);

Rational evaluate(const BiPoly& p, const Rational& x, const Rational& y);

/// Floating-point evaluation, for sampling and black-box wrapping.
double evaluate(const BiPoly& p, double x, double y);

/// Dense univariate polynomial in t; coefficients()[i] multiplies t^i.
/// The highest stored coefficient is nonzero; zero has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t power) const;
  UniPoly derivative() const;
  std::string str() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// t -> p(t dx, t dy).
UniPoly restrict_to_ray(const BiPoly& p, const Ray& v);

}  // namespace supersmooth
