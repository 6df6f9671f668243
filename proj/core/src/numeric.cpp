#include "ppdet/numeric.hpp"

#include <climits>

namespace ppdet {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

bool is_integer(const Rational& v) { return v.get_den() == 1; }

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return v.get_si();
}

long to_long(const Rational& v) {
  if (!is_integer(v)) throw std::invalid_argument("to_long: not an integer");
  return to_long(Integer(v.get_num()));
}

Integer factorial(long k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rational factorial_reciprocal(long k) {
  if (k < 0) return Rational(0);
  return make_rational(Integer(1), factorial(k));
}

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational acc(1);
  Rational f(a);
  for (long t = 0; t < k; ++t, f += 1) acc *= f;
  return acc;
}

Integer pochhammer(long a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Integer acc(1);
  for (long t = 0; t < k; ++t) acc *= Integer(a + t);
  return acc;
}

Rational pochhammer_ext(const Rational& a, long k) {
  if (k >= 0) return pochhammer(a, k);
  Rational down = pochhammer(a + k, -k);
  if (down == 0) throw std::domain_error("pochhammer_ext: vanishing product");
  return Rational(1) / down;
}

Integer binomial(const Integer& a, long k) {
  if (k < 0) return Integer(0);
  Integer num(1);
  for (long t = 0; t < k; ++t) num *= a - t;
  Integer r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
  return r;
}

Integer binomial(long a, long k) { return binomial(Integer(a), k); }

Rational binomial(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  Rational f(a);
  for (long t = 0; t < k; ++t, f -= 1) num *= f;
  return num / Rational(factorial(k));
}

Integer double_factorial(long k) {
  if (k < -1) throw std::invalid_argument("double_factorial: argument < -1");
  Integer acc(1);
  for (long v = k; v >= 2; v -= 2) acc *= v;
  return acc;
}

}  // namespace ppdet
