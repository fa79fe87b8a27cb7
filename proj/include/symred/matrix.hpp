#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symred/rational.hpp"

namespace symred {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Builds from nested rows; all rows must have equal length.
  explicit RatMatrix(const std::vector<RatVector>& rows);
  /// Stacks row vectors of the given width (works for zero rows).
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RatVector row_vector(std::size_t r) const;
  RatVector column_vector(std::size_t c) const;
  std::vector<RatVector> row_list() const;

  RatMatrix transpose() const;
  RatVector apply(const RatVector& x) const;  // this * x
  RatMatrix operator*(const RatMatrix& other) const;

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Canonical basis of the right null space: one vector per free column of
/// rref(m), in increasing free-column order, with a 1 in that column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// One solution of m x = rhs with all free variables set to zero, or
/// nullopt when the system is inconsistent. Throws InputError when
/// rhs.size() != m.rows().
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& rhs);

/// Nonzero rows of rref of the stacked vectors: a canonical basis of
/// their span. Vectors must share the given dimension.
std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors, std::size_t dim);

Rational determinant(const RatMatrix& m);

}  // namespace symred
