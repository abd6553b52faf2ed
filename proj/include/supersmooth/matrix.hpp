#pragma once

#include <cstddef>
#include <vector>

#include "supersmooth/rational.hpp"

namespace supersmooth {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument unless entries.size() == rows * cols.
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  RatVector multiply(const RatVector& v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank over Q.
std::size_t rank(const RatMatrix& m);

/// Basis of {w : m w = 0}. Each vector is a primitive integer vector whose
/// first nonzero entry is positive; rank(m) + basis size == m.cols().
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Scales v to a primitive integer vector with positive first nonzero entry.
RatVector primitive_integer_vector(const RatVector& v);

}  // namespace supersmooth
