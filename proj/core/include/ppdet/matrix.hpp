#pragma once

#include <cstddef>
#include <vector>

#include "ppdet/numeric.hpp"
#include "ppdet/unipoly.hpp"

namespace ppdet {

/// Dense rectangular matrix of exact rationals. Dimensions may be zero;
/// the empty 0x0 determinant is 1.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  /// Square submatrix on rows 0..k-1 and the given columns.
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix without_row_col(std::size_t r, std::size_t c) const;
  /// Rows r0..r1-1, columns c0..c1-1.
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0,
               std::size_t c1) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

/// Dense square matrix with polynomial entries (for symbolic-x
/// determinants at small fixed order).
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), e_(n * n) {}
  std::size_t order() const { return n_; }
  UniPoly& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const UniPoly& at(std::size_t i, std::size_t j) const {
    return e_[i * n_ + j];
  }

 private:
  std::size_t n_ = 0;
  std::vector<UniPoly> e_;
};

/// Skew-symmetric matrix: zero diagonal and M[j][i] = -M[i][j] are
/// enforced structurally by storing only the strict upper triangle.
class SkewMatrix {
 public:
  explicit SkewMatrix(std::size_t order)
      : n_(order), upper_(order * (order + 1) / 2, Rational(0)) {}

  std::size_t order() const { return n_; }
  void set_upper(std::size_t i, std::size_t j, const Rational& v);
  Rational get(std::size_t i, std::size_t j) const;
  Matrix to_matrix() const;

 private:
  std::size_t idx(std::size_t i, std::size_t j) const {
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }
  std::size_t n_ = 0;
  std::vector<Rational> upper_;
};

}  // namespace ppdet
