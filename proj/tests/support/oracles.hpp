#pragma once

// Test-only reference computations. Nothing here calls the library's
// elimination or constraint-building code.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "supersmooth/fan.hpp"
#include "supersmooth/poly.hpp"

namespace supersmooth::testing {

/// Plain Gaussian elimination over mpq_class, first nonzero pivot.
inline std::size_t oracle_rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline unsigned binom2(unsigned n) { return n * (n - 1) / 2; }

/// Spline dimension on a single-vertex fan from the smoothing-cofactor
/// argument: the jump across ray j is l_j^(r+1) q_j with deg q_j <= d-r-1,
/// and the jumps must sum to zero going around the vertex. So
/// dim = dim P_d + dim ker[(q_j) -> sum_j l_j^(r+1) q_j].
inline std::size_t oracle_spline_dimension(const FanPartition& fan, unsigned d, unsigned r) {
  const std::size_t global = (d + 1) * (d + 2) / 2;
  if (d < r + 1) return global;
  const unsigned qdeg = d - r - 1;
  // Monomials of P_qdeg and of P_d, indexed (i, j) -> position.
  std::vector<std::pair<unsigned, unsigned>> qmon;
  for (unsigned e = 0; e <= qdeg; ++e)
    for (unsigned i = 0; i <= e; ++i) qmon.emplace_back(i, e - i);
  auto target_index = [](unsigned i, unsigned j) {
    const unsigned e = i + j;
    return e * (e + 1) / 2 + i;
  };
  const std::size_t target_size = (d + 1) * (d + 2) / 2;
  const std::size_t unknowns = fan.size() * qmon.size();

  // columns: unknown (ray j, q-monomial); rows: coefficients in P_d.
  std::vector<std::vector<mpq_class>> m(target_size, std::vector<mpq_class>(unknowns));
  for (std::size_t j = 0; j < fan.size(); ++j) {
    // l_j = dy x - dx y vanishes on the ray's line.
    const mpq_class a = fan.ray(j).dy().get();
    const mpq_class b = -fan.ray(j).dx().get();
    // Expand l^(r+1) by the binomial theorem.
    std::vector<mpq_class> lpow(r + 2);  // coefficient of x^i y^(r+1-i)
    mpz_class binom = 1;
    for (unsigned i = 0; i <= r + 1; ++i) {
      mpq_class ai = 1, bi = 1;
      for (unsigned t = 0; t < i; ++t) ai *= a;
      for (unsigned t = 0; t < r + 1 - i; ++t) bi *= b;
      lpow[i] = mpq_class(binom) * ai * bi;
      binom = binom * (r + 1 - i) / (i + 1);
    }
    for (std::size_t q = 0; q < qmon.size(); ++q) {
      for (unsigned i = 0; i <= r + 1; ++i) {
        const unsigned xi = qmon[q].first + i;
        const unsigned yi = qmon[q].second + (r + 1 - i);
        m[target_index(xi, yi)][j * qmon.size() + q] += lpow[i];
      }
    }
  }
  return global + (unknowns - oracle_rank(std::move(m)));
}

/// Point p lies in the clockwise sweep [a, b) from ray a to ray b, decided by
/// cross-product signs only.
inline bool oracle_in_sweep(const Rational& ax, const Rational& ay, const Rational& bx,
                            const Rational& by, const Rational& px, const Rational& py) {
  auto cr = [](const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy) {
    return (ux * vy - uy * vx).sign();
  };
  auto dot = [](const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy) {
    return (ux * vx + uy * vy).sign();
  };
  if (cr(ax, ay, px, py) == 0 && dot(ax, ay, px, py) > 0) return true;
  const int ab = cr(ax, ay, bx, by);
  if (ab < 0) return cr(ax, ay, px, py) < 0 && cr(px, py, bx, by) < 0;
  if (ab == 0) return cr(ax, ay, px, py) < 0;  // b opposite a
  // Sweep wider than a half-plane: complement of [b, a).
  const bool in_complement = (cr(bx, by, px, py) == 0 && dot(bx, by, px, py) > 0) ||
                             (cr(bx, by, px, py) < 0 && cr(px, py, ax, ay) < 0);
  return !in_complement;
}

}  // namespace supersmooth::testing
