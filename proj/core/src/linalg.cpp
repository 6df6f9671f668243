#include "ppdet/linalg.hpp"

#include <unordered_map>

namespace ppdet {

Rational det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Integer lift: clear each row's denominators, keep the scale product.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer rowlcm(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(rowlcm.get_mpz_t(), rowlcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = m.at(i, j) * Rational(rowlcm);
      a[i][j] = v.get_num();
    }
    scale *= rowlcm;
  }

  // Bareiss elimination; every division below is exact.
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational result = make_rational(a[n - 1][n - 1], scale);
  if (sign < 0) result = -result;
  return result;
}

namespace {

// Determinant of the rows starting at `row` on the column set `mask`,
// expanding along the top row; memoized per column subset.
UniPoly det_poly_rec(const PolyMatrix& m, std::size_t row, std::uint32_t mask,
                     std::unordered_map<std::uint32_t, UniPoly>& memo) {
  if (mask == 0) return UniPoly(Rational(1));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  UniPoly acc;
  int parity = 0;
  for (std::size_t j = 0; j < m.order(); ++j) {
    if (!(mask & (1u << j))) continue;
    const UniPoly& e = m.at(row, j);
    if (!e.is_zero()) {
      UniPoly sub = det_poly_rec(m, row + 1, mask & ~(1u << j), memo);
      UniPoly term = e * sub;
      acc = (parity % 2 == 0) ? acc + term : acc - term;
    }
    ++parity;
  }
  memo.emplace(mask, acc);
  return acc;
}

Rational pfaffian_rec(const Matrix& m, std::uint32_t mask,
                      std::unordered_map<std::uint32_t, Rational>& memo) {
  if (mask == 0) return Rational(1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::size_t first = 0;
  while (!(mask & (1u << first))) ++first;
  Rational acc(0);
  int pos = 0;
  for (std::size_t j = first + 1; j < m.rows(); ++j) {
    if (!(mask & (1u << j))) continue;
    const Rational& e = m.at(first, j);
    if (e != 0) {
      Rational sub =
          pfaffian_rec(m, mask & ~(1u << first) & ~(1u << j), memo);
      if (pos % 2 == 0)
        acc += e * sub;
      else
        acc -= e * sub;
    }
    ++pos;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

UniPoly det_poly(const PolyMatrix& m) {
  if (m.order() > 8) throw std::invalid_argument("det_poly: order > 8");
  if (m.order() == 0) return UniPoly(Rational(1));
  std::unordered_map<std::uint32_t, UniPoly> memo;
  return det_poly_rec(m, 0, (1u << m.order()) - 1, memo);
}

Rational pfaffian(const SkewMatrix& m) {
  const std::size_t n = m.order();
  if (n % 2 == 1) return Rational(0);
  if (n > 12) throw std::invalid_argument("pfaffian: order > 12");
  if (n == 0) return Rational(1);
  std::unordered_map<std::uint32_t, Rational> memo;
  return pfaffian_rec(m.to_matrix(), (1u << n) - 1, memo);
}

Rational minor_sum(const Matrix& m, std::size_t k) {
  if (k > m.rows() || k > m.cols())
    throw std::invalid_argument("minor_sum: k out of range");
  if (k == 0) return Rational(1);
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  Rational acc(0);
  for (;;) {
    acc += det(m.select_columns(cols));
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i-- > 0) {
      if (cols[i] + (k - i) < m.cols()) {
        ++cols[i];
        for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
        break;
      }
      if (i == 0) return acc;
    }
  }
}

bool desnanot_jacobi_check(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw std::invalid_argument("desnanot_jacobi_check: need square, n >= 2");
  const std::size_t n = m.rows();
  Rational lhs = det(m) * det(m.block(1, n - 1, 1, n - 1));
  Rational rhs = det(m.without_row_col(n - 1, n - 1)) *
                     det(m.without_row_col(0, 0)) -
                 det(m.without_row_col(0, n - 1)) *
                     det(m.without_row_col(n - 1, 0));
  return lhs == rhs;
}

}  // namespace ppdet
