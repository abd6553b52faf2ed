#include "supersmooth/dimension.hpp"

#include <algorithm>
#include <stdexcept>

namespace supersmooth {

SplineLayout::SplineLayout(std::size_t pieces, unsigned degree) : pieces_(pieces), degree_(degree) {
  for (unsigned e = 0; e <= degree; ++e) {
    for (unsigned xp = e + 1; xp-- > 0;) monomials_.push_back({xp, e - xp});
  }
}

std::size_t SplineLayout::index(std::size_t piece, const Monomial& m) const {
  if (m.degree() > degree_) throw std::out_of_range("monomial above layout degree");
  // Offset of degree e is e(e+1)/2; within it x runs downward from e.
  const unsigned e = m.degree();
  return piece * per_piece() + e * (e + 1) / 2 + (e - m.x);
}

std::vector<BiPoly> SplineLayout::to_pieces(const RatVector& coords) const {
  if (coords.size() != unknowns()) throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<BiPoly> out;
  for (std::size_t p = 0; p < pieces_; ++p) {
    BiPoly::TermMap terms;
    for (std::size_t i = 0; i < per_piece(); ++i) terms.emplace(monomials_[i], coords[p * per_piece() + i]);
    out.emplace_back(std::move(terms));
  }
  return out;
}

namespace {

// d^kappa (x^i y^j) restricted to t * (dx, dy), as the coefficient of the
// single power of t it produces.
Rational restricted_partial(const Monomial& m, unsigned kx, unsigned ky, const Ray& ray) {
  if (m.x < kx || m.y < ky) return Rational(0);
  return falling_factorial(m.x, kx) * falling_factorial(m.y, ky) * ray.dx().pow(m.x - kx) *
         ray.dy().pow(m.y - ky);
}

// Constraint rows for homogeneous degree e only. Columns: piece-major, x
// power descending, i.e. the same order SplineLayout uses inside degree e.
RatMatrix degree_block(const FanPartition& fan, unsigned e, unsigned smoothness) {
  const std::size_t k = fan.size();
  const std::size_t width = e + 1;
  std::vector<RatVector> rows;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t left = (j + k - 1) % k;
    for (unsigned order = 0; order <= std::min(smoothness, e); ++order) {
      for (unsigned kx = order + 1; kx-- > 0;) {
        RatVector row(k * width);
        for (unsigned xp = e + 1; xp-- > 0;) {
          const Rational v = restricted_partial({xp, e - xp}, kx, order - kx, fan.ray(j));
          row[left * width + (e - xp)] += v;
          row[j * width + (e - xp)] -= v;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return RatMatrix::from_rows(rows);
}

}  // namespace

RatMatrix smoothness_constraints(const FanPartition& fan, unsigned degree, unsigned smoothness) {
  const SplineLayout layout(fan.size(), degree);
  std::vector<RatVector> rows;
  for (unsigned e = 0; e <= degree; ++e) {
    const RatMatrix block = degree_block(fan, e, smoothness);
    const std::size_t width = e + 1;
    for (std::size_t r = 0; r < block.rows(); ++r) {
      RatVector row(layout.unknowns());
      for (std::size_t c = 0; c < block.cols(); ++c) {
        const std::size_t piece = c / width;
        const unsigned xp = e - static_cast<unsigned>(c % width);
        row[layout.index(piece, {xp, e - xp})] = block(r, c);
      }
      rows.push_back(std::move(row));
    }
  }
  return RatMatrix::from_rows(rows);
}

SplineSpace spline_space(const FanPartition& fan, unsigned degree, unsigned smoothness) {
  const SplineLayout layout(fan.size(), degree);
  SplineSpace space{fan, degree, smoothness, 0, {}};
  for (unsigned e = 0; e <= degree; ++e) {
    const RatMatrix block = degree_block(fan, e, smoothness);
    const std::size_t width = e + 1;
    for (const RatVector& w : nullspace(block)) {
      RatVector full(layout.unknowns());
      for (std::size_t c = 0; c < w.size(); ++c) {
        const std::size_t piece = c / width;
        const unsigned xp = e - static_cast<unsigned>(c % width);
        full[layout.index(piece, {xp, e - xp})] = w[c];
      }
      space.basis.push_back(std::move(full));
    }
  }
  space.dimension = space.basis.size();
  return space;
}

std::size_t spline_space_dimension(const FanPartition& fan, unsigned degree, unsigned smoothness) {
  std::size_t total_rank = 0;
  for (unsigned e = 0; e <= degree; ++e) total_rank += rank(degree_block(fan, e, smoothness));
  return SplineLayout(fan.size(), degree).unknowns() - total_rank;
}

PiecewisePoly sample_spline(const SplineSpace& space, std::mt19937_64& rng, int box) {
  const SplineLayout layout(space.fan.size(), space.degree);
  std::uniform_int_distribution<int> weight(-box, box);
  RatVector coords(layout.unknowns());
  for (const RatVector& b : space.basis) {
    const Rational w(weight(rng));
    if (w.is_zero()) continue;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!b[i].is_zero()) coords[i] += w * b[i];
    }
  }
  return PiecewisePoly(space.fan, layout.to_pieces(coords));
}

}  // namespace supersmooth
