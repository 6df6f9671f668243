#pragma once

#include <functional>
#include <vector>

#include "ppdet/numeric.hpp"

namespace ppdet {

/// Terminating hypergeometric series sum_k prod(tops)_k / (k! prod(bottoms)_k) z^k.
/// Termination is decided at evaluation time: the sum runs to the first
/// index where some top shifted factorial vanishes, exclusive; a bottom
/// shifted factorial vanishing strictly before that index is an error
/// (a genuine 0/0 is surfaced, never guessed).
struct HyperSeries {
  std::vector<Rational> tops;
  std::vector<Rational> bottoms;
  Rational argument;
};

Rational hyper_eval(const HyperSeries& s);

/// Result of an exact both-sides identity check.
struct BothSides {
  Rational lhs, rhs;
  bool equal = false;
};

/// 4F3[-n/2, 1/2-n/2, -A, A+B; 1-n, B/2, 1/2+B/2; 1]
///   = ((A+B)_n + (-A)_n) / (B)_n.
BothSides lemma_a3_check(long n, const Rational& A, const Rational& B);

/// 5F4[1-2n/3, -n/2, 1/2-n/2, -A, A+B; -2n/3, 1-n, 1/2+B/2, 1+B/2; 1]
///   = ((A-B-2n)(-A)_n + (A+2B+2n)(A+B)_n) / (2(2A+B)(1+B)_n).
BothSides lemma_a4_check(long n, const Rational& A, const Rational& B);

/// The A = 2n+B specialization of lemma_a4:
/// 5F4[...] = (2n+2B)_n / (2 (1+B)_n).
BothSides cor_a5_check(long n, const Rational& B);

/// 6F5[4/3+2n/3+B, 1-2n/3, -n/2, 1/2-n/2, -1-2n-B, 2n+2B;
///     1/3+2n/3+B, -2n/3, 1-n, 1+B/2, 3/2+B/2; 1]
///   = (1+5n+3B)(2n+2B)_n / (2(1+2n+3B)(2+B)_n).
BothSides lemma_a6_check(long n, const Rational& B);

/// Vandermonde: 2F1[a, -n; c; 1] = (c-a)_n / (c)_n.
BothSides vandermonde_check(const Rational& a, long n, const Rational& c);

/// Elementary symmetric function e_k(a, a+1, ..., a+n-1); 0 when n < k.
Rational esym(const Rational& a, long n, long k);

/// True iff the (d+1)-th finite difference of f vanishes on the window of
/// consecutive integers [start, start+len) and the d-th does not. Requires
/// len >= d+2.
bool degree_probe(const std::function<Rational(long)>& f, long claimed_degree,
                  long window_start, long window_len);

}  // namespace ppdet
