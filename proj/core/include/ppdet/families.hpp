#pragma once

#include "ppdet/linalg.hpp"
#include "ppdet/matrix.hpp"

namespace ppdet {

// Matrix builders. Row/column indices i, j always run from 0.

/// n rows, columns j = 0..2n+x-2, entry C(x+i, j-i).
Matrix matrix_21(long x, long n);

/// n x n, entry sum_{x+2i-j < r <= x+2j-i} C(2x+i+j, r) under the directed
/// convention; diagonal entries are 0. The square of the even-n count.
Matrix matrix_22a(long x, long n);

/// (n-1) x (n-1), entry
/// (2x+i+j+1)! (3x+3i+4)(3x+3j+4)(3j-3i) / ((x+2i-j+2)! (x+2j-i+2)!).
/// 2^(2x) times its determinant is the square of the odd-n count.
Matrix matrix_22b(long x, long n);

/// Number of nonintersecting pairs of free-endpoint paths, in closed form:
/// sum_{x+2i-j < r <= x+2j-i} C(2x+i+j, r). Antisymmetric in (i, j).
Rational q_entry(long x, long i, long j);

/// n x n skew matrix with entries q_entry(x, i, j) (n even route).
SkewMatrix q_matrix_even(long x, long n);

/// (n+1) x (n+1) skew matrix bordered by a dummy-path row: first row
/// 2^(x+j), interior q_entry (n odd route).
SkewMatrix q_matrix_odd(long x, long n);

/// n x n, entry sum_{x+2i-j < r <= y+2j-i} C(x+y+i+j, r). Equals
/// matrix_22a when y = x. Negative x, y are allowed.
Matrix d_matrix(long x, long y, long n);

/// Row/column-operated equivalents of d_matrix with identical determinant.
Matrix d_matrix_alt4(long x, long y, long n);
Matrix d_matrix_alt5(long x, long y, long n);

/// Border sums appearing in the factored forms of d_matrix.
Rational s_sum(long x, long y, long n);
Rational t_sum(long x, long y);
Rational u_sum(const Rational& x, const Rational& y, long n);

/// n x n, entry
/// (x+y+i+j-1)! (y-x+3j-3i) / ((x+2i-j+1)! (y+2j-i+1)!), with 1/k! = 0 for
/// k < 0. The single numerator factorial at a negative argument occurs
/// only at x=y=0, i=j=0, where the vanishing linear factor wins and the
/// entry is 0.
Matrix e_matrix(long x, long y, long n);

enum class AbVariant { factorial, binomial };

/// n x n; factorial variant entry (x+y+i+j-1)!/((x+2i-j)!(y+2j-i)!),
/// binomial variant entry C(x+y+i+j, y+2j-i) + C(x+y+i+j-1, y+2j-i-1).
Matrix ab_matrix(long x, long y, long n, AbVariant variant);

/// n x n with entry C(x+i+j+1, 2j-i+1) + C(x+i+j, 2j-i); coincides with
/// the binomial ab_matrix at y = 1.
Matrix andrews_burge_matrix(long x, long n);

// Closed-form right-hand sides. All values are exact rationals.

/// Parity-split product formula for the free-endpoint path count
/// (the TSSCPP numbers 1, 2, 7, 42, 429, ... at x = 0).
Rational rhs_thm11(long x, long n);

/// det d_matrix(x, x+m, n) in closed form for m = 0..4 (other m rejected);
/// n must be at least the clause minimum (= m).
Rational rhs_cor3(long x, long m, long n);

/// Prefactor-times-sum evaluation of det e_matrix(x, y, n).
Rational rhs_thm8(long x, long y, long n);

/// The alternating sum  sum_k (-1)^k C(n,k) (x)_k (y)_{n-k}.
Rational sum_thm8(const Rational& x, const Rational& y, long n);

/// det e_matrix(x, x+m, n) in closed form; requires m <= n.
Rational rhs_thm9(long x, long m, long n);

/// The chi-parity binomial sum
/// sum_k C(m, 2k + [n odd]) (floor(n/2)-k+1)_k (x+ceil(m/2)+floor(n/2))_{floor(m/2)-k}.
Rational sum_thm9(const Rational& x, long m, long n);

/// Both sides of the identity linking sum_thm8 and sum_thm9:
/// sum_thm8(x, x+m, n) = n!/floor(n/2)! * (x+m)_{floor(n/2)-floor(m/2)}
///                       * sum_thm9(x, m, n).
struct Thm9SumCheck {
  Rational lhs, rhs;
  bool equal;
};
Thm9SumCheck thm9_sum(const Rational& x, long m, long n);

/// det e_matrix(x, x+m, n) in closed form for m in {0, 1} (others
/// rejected).
Rational rhs_cor6(long x, long m, long n);

/// det ab_matrix(x, y, n, variant) in closed form.
Rational rhs_thm10(long x, long y, long n, AbVariant variant);

/// Constant-term product values of the two n-variable weighted kernels.
Rational rhs_thm12(long x, long y, long n);
Rational rhs_thm13(long x, long y, long n);

}  // namespace ppdet
