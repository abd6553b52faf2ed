#include "supersmooth/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace supersmooth {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match its shape");
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {rows.size(), cols, std::move(entries)};
}

RatVector RatMatrix::multiply(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match columns");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

namespace {

// Upper-trapezoidal result of fraction-free elimination. Column j of `rows`
// holds original column col_perm[j]; the leading rank x rank block is upper
// triangular with nonzero diagonal.
struct Echelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> col_perm;
  std::size_t rank = 0;
};

Echelon bareiss_full_pivot(const RatMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  Echelon e;
  e.col_perm.resize(nc);
  std::iota(e.col_perm.begin(), e.col_perm.end(), std::size_t{0});
  e.rows.assign(nr, std::vector<mpz_class>(nc));

  // Clear denominators row by row; row scaling does not change rank or kernel.
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < nc; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < nc; ++c) {
      const mpq_class& q = m(r, c).get();
      e.rows[r][c] = q.get_num() * (lcm / q.get_den());
    }
  }

  mpz_class prev = 1;
  std::size_t k = 0;
  for (; k < std::min(nr, nc); ++k) {
    // First entry (row-major) of maximal absolute value in the trailing block.
    std::size_t pr = nr;
    std::size_t pc = nc;
    for (std::size_t r = k; r < nr; ++r) {
      for (std::size_t c = k; c < nc; ++c) {
        const mpz_class& v = e.rows[r][c];
        if (sgn(v) == 0) continue;
        if (pr == nr || mpz_cmpabs(v.get_mpz_t(), e.rows[pr][pc].get_mpz_t()) > 0) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == nr) break;
    std::swap(e.rows[k], e.rows[pr]);
    if (pc != k) {
      for (auto& row : e.rows) std::swap(row[k], row[pc]);
      std::swap(e.col_perm[k], e.col_perm[pc]);
    }
    const mpz_class& pivot = e.rows[k][k];
    for (std::size_t r = k + 1; r < nr; ++r) {
      auto& row = e.rows[r];
      const mpz_class factor = row[k];
      for (std::size_t c = k + 1; c < nc; ++c) {
        mpz_class t = pivot * row[c];
        if (sgn(factor) != 0) t -= factor * e.rows[k][c];
        mpz_divexact(row[c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[k] = 0;
    }
    prev = pivot;
  }
  e.rank = k;
  return e;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return bareiss_full_pivot(m).rank; }

RatVector primitive_integer_vector(const RatVector& v) {
  mpz_class lcm = 1;
  for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get().get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get().get_num() * (lcm / v[i].get().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  const auto first = std::find_if(ints.begin(), ints.end(), [](const mpz_class& z) { return sgn(z) != 0; });
  if (sgn(*first) < 0) g = -g;
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(mpz_class(ints[i] / g));
  return out;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  const Echelon e = bareiss_full_pivot(m);
  const std::size_t nc = m.cols();
  const std::size_t r = e.rank;

  std::vector<std::pair<std::size_t, RatVector>> keyed;
  for (std::size_t free = r; free < nc; ++free) {
    // Permuted-coordinate solution with x_free = 1 and the other free
    // variables zero, by back substitution through the triangular block.
    std::vector<mpq_class> x(nc);
    x[free] = 1;
    for (std::size_t i = r; i-- > 0;) {
      mpq_class s = 0;
      for (std::size_t j = i + 1; j < nc; ++j) {
        if (sgn(x[j]) != 0 && sgn(e.rows[i][j]) != 0) s += mpq_class(e.rows[i][j]) * x[j];
      }
      x[i] = -s / mpq_class(e.rows[i][i]);
    }
    RatVector w(nc);
    for (std::size_t j = 0; j < nc; ++j) w[e.col_perm[j]] = Rational(x[j]);
    keyed.emplace_back(e.col_perm[free], primitive_integer_vector(w));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RatVector> basis;
  basis.reserve(keyed.size());
  for (auto& [key, w] : keyed) basis.push_back(std::move(w));
  return basis;
}

}  // namespace supersmooth
