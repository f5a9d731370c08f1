#pragma once

// Exact row reduction over a field (Rational or QSqrt2): rank and nullspace
// of rectangular matrices, e.g. stacked linear constraints.

#include <cstddef>
#include <utility>
#include <vector>

#include "tpd/core/errors.hpp"

namespace tpd {

template <class T>
class DynMatrix {
 public:
  DynMatrix() = default;
  DynMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const std::vector<T>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw InvalidInput("DynMatrix::append_row: width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw InvalidInput("DynMatrix::apply: size mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

template <class T>
bool is_zero_scalar(const T& x) {
  return x == T(0);
}

namespace detail {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
template <class T>
std::vector<std::size_t> rref(DynMatrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero_scalar(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero_scalar(m(r, col))) continue;
      const T f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class T>
std::size_t rank(DynMatrix<T> m) {
  return detail::rref(m).size();
}

/// Basis of {v : M v = 0}. One vector per free column of the reduced echelon
/// form, with a 1 in that column; the basis has cols - rank elements.
template <class T>
std::vector<std::vector<T>> nullspace(DynMatrix<T> m) {
  const std::size_t n = m.cols();
  const auto pivots = detail::rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(n, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tpd
