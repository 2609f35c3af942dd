#pragma once

#include <string>
#include <vector>

#include "qtwist/scalar.hpp"

namespace qtwist {

/// Dense square or rectangular matrix over an exact field, row-major.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix diagonal(const std::vector<F>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix z(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const F& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          if (!y(k, j).is_zero()) z(i, j) += xik * y(k, j);
      }
    return z;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Gauss-Jordan inverse; throws DivisionByZero when singular.
  Matrix inverse() const {
    if (!is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix m = *this, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m(p, c).is_zero()) ++p;
      if (p == n) throw DivisionByZero();
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(p, j), m(c, j));
          std::swap(inv(p, j), inv(c, j));
        }
      }
      F s = m(c, c).inverse();
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) = m(c, j) * s;
        inv(c, j) = inv(c, j) * s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m(r, c).is_zero()) continue;
        F f = m(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
          if (!inv(c, j).is_zero()) inv(r, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  F determinant() const {
    if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = rows_;
    Matrix m = *this;
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m(p, c).is_zero()) ++p;
      if (p == n) return F();
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      F s = m(c, c).inverse();
      for (std::size_t r = c + 1; r < n; ++r) {
        if (m(r, c).is_zero()) continue;
        F f = m(r, c) * s;
        for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return det;
  }

  bool is_invertible() const { return is_square() && !determinant().is_zero(); }

  /// Integer power; negative exponents go through the inverse.
  Matrix power(long e) const {
    if (e < 0) return inverse().power(-e);
    Matrix result = identity(rows_), b = *this;
    while (e > 0) {
      if (e & 1) result = result * b;
      b = b * b;
      e >>= 1;
    }
    return result;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
  }

  /// Exactly one nonzero entry in every row and every column.
  bool is_generalized_permutation() const {
    if (!is_square()) return false;
    std::vector<int> col_count(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      int row_count = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) {
          ++row_count;
          ++col_count[j];
        }
      if (row_count != 1) return false;
    }
    for (int c : col_count)
      if (c != 1) return false;
    return true;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using G = decltype(fn(std::declval<const F&>()));
    Matrix<G> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

}  // namespace qtwist
