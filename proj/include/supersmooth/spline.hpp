#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "supersmooth/fan.hpp"
#include "supersmooth/poly.hpp"

namespace supersmooth {

/// Smoothness order enriched with "not even continuous" (below 0) and
/// "infinite" (above every finite order).
class SmoothOrder {
 public:
  static constexpr SmoothOrder not_continuous() { return SmoothOrder(kNotContinuous); }
  static constexpr SmoothOrder infinite() { return SmoothOrder(kInfinite); }
  static constexpr SmoothOrder finite(int r) { return SmoothOrder(r); }
  /// r < 0 maps to not_continuous().
  static constexpr SmoothOrder from_int(int r) { return r < 0 ? not_continuous() : finite(r); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_not_continuous() const { return value_ == kNotContinuous; }
  constexpr bool is_finite() const { return !is_infinite() && !is_not_continuous(); }
  /// Finite value; -1 for not_continuous.
  constexpr int value() const { return value_; }

  /// The next order up; infinite stays infinite.
  constexpr SmoothOrder next() const { return is_infinite() ? *this : SmoothOrder(value_ + 1); }

  /// "infinite", "not continuous" or the decimal order.
  std::string str() const;

  friend constexpr auto operator<=>(const SmoothOrder&, const SmoothOrder&) = default;

 private:
  static constexpr int kNotContinuous = -1;
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  constexpr explicit SmoothOrder(int v) : value_(v) {}

  int value_;
};

/// A fan with one polynomial piece per sector; pieces[j] lives on sector j,
/// between ray j and ray j+1 clockwise.
class PiecewisePoly {
 public:
  /// Throws ArityError unless pieces.size() == fan.size().
  PiecewisePoly(FanPartition fan, std::vector<BiPoly> pieces);

  const FanPartition& fan() const { return fan_; }
  const std::vector<BiPoly>& pieces() const { return pieces_; }
  const BiPoly& piece(std::size_t j) const { return pieces_[j]; }
  std::size_t size() const { return pieces_.size(); }
  unsigned max_degree() const;

  /// Value at (x, y) using the piece of locate_sector; piece 0 at the origin.
  Rational value_at(const Rational& x, const Rational& y) const;

  friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

 private:
  FanPartition fan_;
  std::vector<BiPoly> pieces_;
};

/// Order of contact across ray j, which separates piece j-1 (mod k) and
/// piece j: the largest r such that every partial of order <= r of their
/// difference vanishes on the ray's line.
SmoothOrder smoothness_across_ray(const PiecewisePoly& f, std::size_t j);

/// Largest r with (y + a x)^(r+1) dividing diff, by repeated exact division.
SmoothOrder line_divisibility_order(const BiPoly& diff, const Rational& a);

SmoothOrder global_smoothness_order(const PiecewisePoly& f);

struct OriginPartialRow {
  Monomial index;               // (order in x, order in y)
  std::vector<Rational> values;  // one per piece
  bool agrees = false;
};

/// D^kappa f_j(0) for every |kappa| <= max_order, ordered by total order then
/// descending x order.
std::vector<OriginPartialRow> origin_partials(const PiecewisePoly& f, unsigned max_order);

/// Largest m such that all partials of order <= m agree at the origin.
SmoothOrder origin_smoothness_order(const PiecewisePoly& f);

enum class Supersmoothness { holds, violated, not_applicable };

struct SmoothnessReport {
  std::vector<SmoothOrder> per_ray_order;
  SmoothOrder global_order = SmoothOrder::not_continuous();
  SmoothOrder origin_order = SmoothOrder::not_continuous();
  bool theorem_applicable = false;
  Supersmoothness supersmoothness = Supersmoothness::not_applicable;

  /// Line-oriented text: "ray i: order r" lines, then "global:", "origin:",
  /// "theorem applicable:" and "supersmoothness:".
  std::string render() const;
};

/// Applicability is (collinear-free fan AND global order >= k - 2); when it
/// applies the report records whether origin order >= global order + 1.
SmoothnessReport supersmoothness_verdict(const PiecewisePoly& f);

}  // namespace supersmooth
