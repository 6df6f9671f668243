#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ppdet {

// All scalars in this library are exact. Integer is an arbitrary-precision
// integer, Rational an arbitrary-precision fraction kept in lowest terms
// with a positive denominator (zero is 0/1). There is no floating point
// anywhere; every comparison downstream is an exact equality.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational. Throws std::invalid_argument on zero
/// denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// Canonical string form: lowest terms, "p/q", or just "p" when q = 1.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

bool is_integer(const Rational& v);

/// Checked narrowing; throws std::overflow_error when out of range.
long to_long(const Integer& v);
long to_long(const Rational& v);  // requires is_integer

/// k! for k >= 0. Negative k is rejected: only the reciprocal has a
/// value there (see factorial_reciprocal).
Integer factorial(long k);

/// 1/k! for k >= 0, and exactly 0 for k < 0 (reciprocal gamma at
/// nonpositive integers).
Rational factorial_reciprocal(long k);

/// Shifted factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1. k < 0 rejected.
Rational pochhammer(const Rational& a, long k);
Integer pochhammer(long a, long k);

/// Shifted factorial extended to negative length: (a)_{-k} = 1/(a-k)_k.
/// Throws std::domain_error when the defining product vanishes.
Rational pochhammer_ext(const Rational& a, long k);

/// Binomial coefficient with integer top, generalized: C(a,k) = 0 for
/// k < 0, otherwise a(a-1)...(a-k+1)/k!. In particular C(a,k) = 0 for
/// 0 <= a < k and C(-1,0) = 1.
Integer binomial(long a, long k);
Integer binomial(const Integer& a, long k);

/// Binomial with rational top.
Rational binomial(const Rational& a, long k);

/// k!! with the empty-product conventions (-1)!! = 0!! = 1. k < -1 rejected.
Integer double_factorial(long k);

/// Summation bounds A, B in either order. encode the three-way rule:
/// sum_{r=A+1}^{B} is the plain sum for A < B, zero for A = B, and the
/// negated reversed sum for A > B. The rule makes the sum antisymmetric
/// under swapping A and B.
struct DirectedBounds {
  long lower = 0;  // A
  long upper = 0;  // B
};

template <typename Term>
Rational directed_sum(DirectedBounds b, Term&& term) {
  if (b.lower == b.upper) return Rational(0);
  const bool flipped = b.lower > b.upper;
  const long lo = flipped ? b.upper : b.lower;
  const long hi = flipped ? b.lower : b.upper;
  Rational acc(0);
  for (long r = lo + 1; r <= hi; ++r) acc += term(r);
  if (flipped) acc = -acc;
  return acc;
}

}  // namespace ppdet
