#include "ppdet/matrix.hpp"

namespace ppdet {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix r(cols.size(), cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(i, cols[j]);
  return r;
}

Matrix Matrix::without_row_col(std::size_t r, std::size_t c) const {
  Matrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out.at(oi, oj) = at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1) const {
  Matrix out(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) out.at(i - r0, j - c0) = at(i, j);
  return out;
}

void SkewMatrix::set_upper(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= j) throw std::invalid_argument("SkewMatrix::set_upper: need i < j");
  upper_[idx(i, j)] = v;
}

Rational SkewMatrix::get(std::size_t i, std::size_t j) const {
  if (i == j) return Rational(0);
  if (i < j) return upper_[idx(i, j)];
  return -upper_[idx(j, i)];
}

Matrix SkewMatrix::to_matrix() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = get(i, j);
  return m;
}

}  // namespace ppdet
