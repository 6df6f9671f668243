#pragma once

#include "ppdet/matrix.hpp"

namespace ppdet {

/// Exact determinant via fraction-free (Bareiss) elimination on a
/// common-denominator integer lift. Non-square matrices are rejected.
Rational det(const Matrix& m);

/// Exact determinant with polynomial entries, by cofactor expansion with
/// column-subset memoization. Orders above 8 are rejected.
UniPoly det_poly(const PolyMatrix& m);

/// Pfaffian with the sign convention Pf([[0,a],[-a,0]]) = a, by recursive
/// expansion along the first row. Odd orders give 0; orders above 12 are
/// rejected.
Rational pfaffian(const SkewMatrix& m);

/// Sum of the k x k minors taken on rows 0..k-1 over all k-subsets of
/// columns, enumerated lexicographically.
Rational minor_sum(const Matrix& m, std::size_t k);

/// Checks det(M) * det(interior) =
///   det(M minus last row/col) * det(M minus first row/col)
/// - det(M minus first row, last col) * det(M minus last row, first col).
bool desnanot_jacobi_check(const Matrix& m);

}  // namespace ppdet
