#pragma once

#include <string>
#include <vector>

#include "ppdet/families.hpp"
#include "ppdet/unipoly.hpp"

namespace ppdet {

enum class ExtractionRoute { step6, integer_nodes, closed_form };

/// Polynomial factor left after dividing a determinant by its explicit
/// shifted-factorial prefactor, plus the consistency evidence gathered
/// while extracting it.
struct ResidualReport {
  long m = 0, n = 0;
  UniPoly polynomial;
  ExtractionRoute route = ExtractionRoute::step6;
  int checks_passed = 0;
  std::vector<std::string> notes;
};

/// The half-integer specialization matrix (order n, parameters m and a
/// rational x) whose determinant drives the step-6 evaluation.
Matrix step6_matrix(const Rational& x, long m, long n);

/// Full right-hand-side value of the step-6 formula at rational x:
/// prefactor ratio times det(step6_matrix). Includes the (2x+m+n) factor
/// required for odd n, even m (absent from the printed product but forced
/// by the divisibility statement; cross-checked against the integer-node
/// route).
Rational step6_rhs(const Rational& x, long m, long n);

/// Prefactor of the d_matrix(x, x+m, n) factorization; nonzero for
/// integer x >= 0.
Rational p1_prefactor(long x, long m, long n);

/// P1(x; m, n) by half-integer specialization of the step-6 formula and
/// Lagrange interpolation on floor(m/2)+1 nodes. Guarded to m <= 6, n <= 8.
ResidualReport p1_via_step6(long m, long n);

/// P1(x; m, n) by dividing det d_matrix at integer nodes by the
/// factorization prefactor and interpolating; agreement is verified at two
/// extra nodes.
ResidualReport p1_numeric(long m, long n);

/// P6(x, y; n) = (prod_i i!) sum_k (-1)^k C(n,k) (x)_k (y)_{n-k}.
Rational p6_value(const Rational& x, const Rational& y, long n);

struct ConsistencyReport {
  int passed = 0, failed = 0, skipped = 0;
  std::vector<std::string> notes;
  bool ok() const { return failed == 0; }
};

/// Checks, on the integer grid 0 <= x, y <= grid_max:
///  - det e_matrix / prefactor = p6_value (degenerate points skipped),
///  - total degree witness (degree exactly n along a generic line),
///  - p6_value(-u, -v) = 0 for u+v <= n-1,
///  - antisymmetry p6(y, x) = (-1)^n p6(x, y),
///  - the closed form of p6(x, x+1).
ConsistencyReport p4_consistency(long n, long grid_max);

/// P5(x; m, n) extracted at integer nodes from the Pochhammer form of the
/// e-determinant, verified against the closed-form sum route.
ResidualReport p5_extract(long m, long n);

enum class Verdict { consistent, inconsistent, insufficient_data };

/// Evidence report for a conjecture explorer: per-n polynomial data plus
/// the interpolated coefficient-in-n polynomials at fixed parity.
struct ExplorerReport {
  std::string conjecture;
  long m = 0;
  Verdict verdict = Verdict::insufficient_data;
  struct Row {
    long n = 0;
    UniPoly poly;  // polynomial in x
  };
  std::vector<Row> rows;
  struct CoeffInN {
    int parity = 0;  // n mod 2
    long e = 0;      // x-exponent
    UniPoly in_n;    // interpolated polynomial in n
    bool integral = false;
    bool positive = false;
  };
  std::vector<CoeffInN> coeff_polys;
  std::vector<std::string> notes;
  std::string render() const;
};

/// Degree/coefficient evidence for the residual factor P3 = P1 * (2
/// floor(n/2) - 1)!! / prod_i i! over an n-range at fixed m.
ExplorerReport explore_p3(long m, long n_lo, long n_hi);

/// Same evidence for the chi-parity binomial-sum polynomial.
ExplorerReport explore_458(long m, long n_lo, long n_hi);

}  // namespace ppdet
