#include "symred/matrix.hpp"

#include <utility>

#include "symred/errors.hpp"

namespace symred {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(const std::vector<RatVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row width mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

RatVector RatMatrix::column_vector(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<RatVector> RatMatrix::row_list() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
  RatMatrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  return p;
}

RrefResult rref(const RatMatrix& m) {
  RrefResult out{m, {}};
  RatMatrix& a = out.matrix;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(lead, j));
    const Rational inv = 1 / a(lead, c);
    for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (a(lead, j) != 0) a(r, j) -= f * a(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const auto [r, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& rhs) {
  if (rhs.size() != m.rows())
    throw InputError("solve_linear: rhs has length " + std::to_string(rhs.size()) +
                     ", matrix has " + std::to_string(m.rows()) + " rows");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  const auto [red, pivots] = rref(RatMatrix::from_rows(vectors, dim));
  std::vector<RatVector> out;
  out.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(red.row_vector(i));
  return out;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace symred
