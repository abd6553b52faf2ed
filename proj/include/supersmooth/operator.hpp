#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "supersmooth/fan.hpp"
#include "supersmooth/poly.hpp"

namespace supersmooth {

/// Polynomial in commuting directional-derivative symbols D_0, ..., D_{s-1}.
///
/// Keys are exponent vectors of length symbol_count(); no zero coefficients
/// are stored.
class OperatorPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit OperatorPoly(std::size_t symbol_count = 0) : symbols_(symbol_count) {}

  static OperatorPoly constant(std::size_t symbol_count, const Rational& c);
  static OperatorPoly symbol(std::size_t symbol_count, std::size_t index,
                             const Rational& c = Rational(1));

  std::size_t symbol_count() const { return symbols_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  bool is_homogeneous_of_degree(unsigned degree) const;

  void add_term(const Exponents& e, const Rational& c);

  OperatorPoly& operator+=(const OperatorPoly& rhs);
  OperatorPoly& operator*=(const OperatorPoly& rhs);
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator*(OperatorPoly a, const OperatorPoly& b) { return a *= b; }
  friend bool operator==(const OperatorPoly&, const OperatorPoly&) = default;

  /// Renders with the given symbol names, e.g. "-D2^2 + D3*D4".
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t symbols_;
  std::map<Exponents, Rational> terms_;
};

/// D_{v1}^n = D_{v2} * p + gamma * prod_{j=3}^{n+2} D_{vj}, over the fan's
/// rays v1..v_{n+2}. Symbol i stands for D along fan ray i+1, so symbol 0 is
/// D_{v2}.
struct PowerOperatorExpansion {
  std::vector<Decomposition> coefficients;  // (alpha_j, beta_j), j = 3..n+2
  OperatorPoly product;                     // prod (alpha_j D_{v2} + beta_j D_{vj})
  OperatorPoly p;                           // homogeneous of degree n-1
  Rational gamma;                           // prod beta_j
};

/// Expansion over labelled rays v1..v_{n+2} (any order; the identity is
/// purely algebraic). Throws ArityError unless rays.size() == n+2 with n >= 1,
/// and SingularDecomposition if two rays are collinear.
PowerOperatorExpansion expand_power_operator(std::span<const Ray> rays, unsigned n);

/// Same, with v1..v_{n+2} taken in the fan's clockwise order.
PowerOperatorExpansion expand_power_operator(const FanPartition& fan, unsigned n);

/// gamma * prod_{j=3}^{n+2} D_{vj} in the expansion's symbols.
OperatorPoly tail_operator(const PowerOperatorExpansion& e);

/// D_{v2} * p + tail: the split form, to be compared with the product.
OperatorPoly split_form(const PowerOperatorExpansion& e);

/// Symbol -> ray map used by expand_power_operator: symbol i -> ray i+1.
std::map<std::size_t, Ray> expansion_directions(std::span<const Ray> rays);

/// Applies op to q, reading each D_i as directional_derivative along
/// directions.at(i). Throws MissingDirection for a used symbol with no ray.
BiPoly apply_operator(const OperatorPoly& op, const std::map<std::size_t, Ray>& directions,
                      const BiPoly& q);

}  // namespace supersmooth
