#include "supersmooth/spline.hpp"

#include <algorithm>
#include <sstream>

#include "supersmooth/errors.hpp"

namespace supersmooth {

std::string SmoothOrder::str() const {
  if (is_infinite()) return "infinite";
  if (is_not_continuous()) return "not continuous";
  return std::to_string(value_);
}

PiecewisePoly::PiecewisePoly(FanPartition fan, std::vector<BiPoly> pieces)
    : fan_(std::move(fan)), pieces_(std::move(pieces)) {
  if (pieces_.size() != fan_.size()) {
    throw ArityError("expected " + std::to_string(fan_.size()) + " pieces, got " +
                     std::to_string(pieces_.size()));
  }
}

unsigned PiecewisePoly::max_degree() const {
  unsigned d = 0;
  for (const auto& p : pieces_) d = std::max(d, p.total_degree());
  return d;
}

Rational PiecewisePoly::value_at(const Rational& x, const Rational& y) const {
  if (x.is_zero() && y.is_zero()) return evaluate(pieces_.front(), x, y);
  return evaluate(pieces_[locate_sector(fan_, x, y)], x, y);
}

namespace {

bool partials_vanish_on_ray(const BiPoly& diff, unsigned order, const Ray& ray) {
  for (unsigned xo = 0; xo <= order; ++xo) {
    if (!restrict_to_ray(partial_derivative(diff, xo, order - xo), ray).is_zero()) return false;
  }
  return true;
}

// Quotient of p by (y - root) viewed as polynomials in y over Q[x], where
// root is a polynomial in x. Returns nullopt if the remainder is nonzero.
std::optional<BiPoly> divide_by_linear(const BiPoly& p, const BiPoly& root) {
  unsigned ydeg = 0;
  for (const auto& [m, c] : p.terms()) ydeg = std::max(ydeg, m.y);
  // coefficient of y^j as a polynomial in x
  std::vector<BiPoly> coeff(ydeg + 1);
  for (const auto& [m, c] : p.terms()) coeff[m.y] += BiPoly::monomial(m.x, 0, c);
  // Synthetic division: b_{j-1} = c_j + root * b_j.
  std::vector<BiPoly> quot(ydeg + 1);
  BiPoly carry;
  for (unsigned j = ydeg; j >= 1; --j) {
    carry = coeff[j] + root * carry;
    quot[j - 1] = carry;
  }
  const BiPoly remainder = coeff[0] + root * carry;
  if (!remainder.is_zero()) return std::nullopt;
  BiPoly q;
  for (unsigned j = 0; j < ydeg; ++j) q += quot[j] * BiPoly::monomial(0, j);
  return q;
}

}  // namespace

SmoothOrder smoothness_across_ray(const PiecewisePoly& f, std::size_t j) {
  const std::size_t k = f.size();
  const BiPoly diff = f.piece((j + k - 1) % k) - f.piece(j);
  if (diff.is_zero()) return SmoothOrder::infinite();
  // The order-deg partials of a nonzero polynomial include a nonzero constant,
  // so the loop ends by deg.
  const Ray& ray = f.fan().ray(j);
  for (unsigned r = 0;; ++r) {
    if (!partials_vanish_on_ray(diff, r, ray)) return SmoothOrder::from_int(static_cast<int>(r) - 1);
  }
}

SmoothOrder line_divisibility_order(const BiPoly& diff, const Rational& a) {
  if (diff.is_zero()) return SmoothOrder::infinite();
  const BiPoly root = BiPoly::monomial(1, 0, -a);  // y = -a x
  BiPoly current = diff;
  int multiplicity = 0;
  while (auto q = divide_by_linear(current, root)) {
    current = std::move(*q);
    ++multiplicity;
  }
  return SmoothOrder::from_int(multiplicity - 1);
}

SmoothOrder global_smoothness_order(const PiecewisePoly& f) {
  SmoothOrder out = SmoothOrder::infinite();
  for (std::size_t j = 0; j < f.size(); ++j) out = std::min(out, smoothness_across_ray(f, j));
  return out;
}

std::vector<OriginPartialRow> origin_partials(const PiecewisePoly& f, unsigned max_order) {
  std::vector<OriginPartialRow> table;
  for (unsigned order = 0; order <= max_order; ++order) {
    for (unsigned xo = order + 1; xo-- > 0;) {
      OriginPartialRow row;
      row.index = {xo, order - xo};
      // D^(i,j) p(0) = i! j! * coeff(i, j)
      const Rational scale = factorial(xo) * factorial(order - xo);
      for (const auto& piece : f.pieces()) row.values.push_back(scale * piece.coeff(xo, order - xo));
      row.agrees = std::all_of(row.values.begin(), row.values.end(),
                               [&](const Rational& v) { return v == row.values.front(); });
      table.push_back(std::move(row));
    }
  }
  return table;
}

SmoothOrder origin_smoothness_order(const PiecewisePoly& f) {
  const unsigned cap = f.max_degree();
  const auto table = origin_partials(f, cap);
  for (const auto& row : table) {
    if (!row.agrees) return SmoothOrder::from_int(static_cast<int>(row.index.degree()) - 1);
  }
  return SmoothOrder::infinite();
}

std::string SmoothnessReport::render() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < per_ray_order.size(); ++i) {
    out << "ray " << i << ": order " << per_ray_order[i].str() << "\n";
  }
  out << "global: " << global_order.str() << "\n";
  out << "origin: " << origin_order.str() << "\n";
  out << "theorem applicable: " << (theorem_applicable ? "yes" : "no") << "\n";
  out << "supersmoothness: ";
  switch (supersmoothness) {
    case Supersmoothness::holds:
      out << "holds";
      break;
    case Supersmoothness::violated:
      out << "violated";
      break;
    case Supersmoothness::not_applicable:
      out << "not applicable";
      break;
  }
  out << "\n";
  return out.str();
}

SmoothnessReport supersmoothness_verdict(const PiecewisePoly& f) {
  SmoothnessReport report;
  report.global_order = SmoothOrder::infinite();
  for (std::size_t j = 0; j < f.size(); ++j) {
    report.per_ray_order.push_back(smoothness_across_ray(f, j));
    report.global_order = std::min(report.global_order, report.per_ray_order.back());
  }
  report.origin_order = origin_smoothness_order(f);

  const int k = static_cast<int>(f.size());
  report.theorem_applicable =
      f.fan().collinear_free() && report.global_order >= SmoothOrder::from_int(k - 2);
  if (report.global_order.is_infinite()) {
    // A single global polynomial is smooth everywhere.
    report.supersmoothness = Supersmoothness::holds;
  } else if (report.theorem_applicable) {
    report.supersmoothness = report.origin_order >= report.global_order.next()
                                 ? Supersmoothness::holds
                                 : Supersmoothness::violated;
  }
  return report;
}

}  // namespace supersmooth
