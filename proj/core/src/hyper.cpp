#include "ppdet/hyper.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace ppdet {

namespace {

// First k >= 0 with (a)_k = 0, i.e. -a + 1 for nonpositive integer a.
std::optional<long> vanish_index(const Rational& a) {
  if (!is_integer(a) || a > 0) return std::nullopt;
  return -to_long(a) + 1;
}

Rational half(long v) { return make_rational(v, 2); }

}  // namespace

Rational hyper_eval(const HyperSeries& s) {
  std::optional<long> K;
  for (const Rational& a : s.tops) {
    auto k = vanish_index(a);
    if (k && (!K || *k < *K)) K = k;
  }
  if (!K)
    throw std::invalid_argument("hyper_eval: non-terminating series");

  Rational sum(0);
  Rational term(1);
  for (long k = 0; k < *K; ++k) {
    sum += term;
    if (k + 1 == *K) break;
    for (const Rational& a : s.tops) term *= a + k;
    for (const Rational& b : s.bottoms) {
      Rational f = b + k;
      if (f == 0) {
        std::ostringstream msg;
        msg << "hyper_eval: bottom parameter " << to_string(b)
            << " vanishes at index " << (k + 1)
            << " before termination index " << *K;
        throw std::domain_error(msg.str());
      }
      term /= f;
    }
    term *= s.argument;
    term /= Rational(k + 1);
  }
  return sum;
}

BothSides lemma_a3_check(long n, const Rational& A, const Rational& B) {
  if (n < 1) throw std::invalid_argument("lemma_a3_check: need n >= 1");
  HyperSeries s{{half(-n), half(1 - n), -A, A + B},
                {Rational(1 - n), B / 2, half(1) + B / 2},
                Rational(1)};
  BothSides r;
  r.lhs = hyper_eval(s);
  r.rhs = (pochhammer(A + B, n) + pochhammer(-A, n)) / pochhammer(B, n);
  r.equal = (r.lhs == r.rhs);
  return r;
}

BothSides lemma_a4_check(long n, const Rational& A, const Rational& B) {
  if (n < 1) throw std::invalid_argument("lemma_a4_check: need n >= 1");
  HyperSeries s{{Rational(1) - make_rational(2 * n, 3), half(-n), half(1 - n),
                 -A, A + B},
                {-make_rational(2 * n, 3), Rational(1 - n), half(1) + B / 2,
                 Rational(1) + B / 2},
                Rational(1)};
  BothSides r;
  r.lhs = hyper_eval(s);
  Rational common = Rational(2) * (Rational(2) * A + B) * pochhammer(B + 1, n);
  r.rhs = ((A - B - 2 * n) * pochhammer(-A, n) +
           (A + Rational(2) * B + 2 * n) * pochhammer(A + B, n)) /
          common;
  r.equal = (r.lhs == r.rhs);
  return r;
}

BothSides cor_a5_check(long n, const Rational& B) {
  if (n < 1) throw std::invalid_argument("cor_a5_check: need n >= 1");
  HyperSeries s{{Rational(1) - make_rational(2 * n, 3), half(-n), half(1 - n),
                 -B - 2 * n, Rational(2) * B + 2 * n},
                {-make_rational(2 * n, 3), Rational(1 - n), half(1) + B / 2,
                 Rational(1) + B / 2},
                Rational(1)};
  BothSides r;
  r.lhs = hyper_eval(s);
  r.rhs = pochhammer(Rational(2) * B + 2 * n, n) /
          (Rational(2) * pochhammer(B + 1, n));
  r.equal = (r.lhs == r.rhs);
  return r;
}

BothSides lemma_a6_check(long n, const Rational& B) {
  if (n < 1) throw std::invalid_argument("lemma_a6_check: need n >= 1");
  Rational two_thirds_n = make_rational(2 * n, 3);
  HyperSeries s{{make_rational(4, 3) + two_thirds_n + B,
                 Rational(1) - two_thirds_n, half(-n), half(1 - n),
                 -B - 2 * n - 1, Rational(2) * B + 2 * n},
                {make_rational(1, 3) + two_thirds_n + B, -two_thirds_n,
                 Rational(1 - n), Rational(1) + B / 2,
                 make_rational(3, 2) + B / 2},
                Rational(1)};
  BothSides r;
  r.lhs = hyper_eval(s);
  r.rhs = (Rational(1 + 5 * n) + Rational(3) * B) *
          pochhammer(Rational(2) * B + 2 * n, n) /
          ((Rational(1 + 2 * n) + Rational(3) * B) *
           Rational(2) * pochhammer(B + 2, n));
  r.equal = (r.lhs == r.rhs);
  return r;
}

BothSides vandermonde_check(const Rational& a, long n, const Rational& c) {
  if (n < 0) throw std::invalid_argument("vandermonde_check: need n >= 0");
  HyperSeries s{{a, Rational(-n)}, {c}, Rational(1)};
  BothSides r;
  r.lhs = hyper_eval(s);
  r.rhs = pochhammer(c - a, n) / pochhammer(c, n);
  r.equal = (r.lhs == r.rhs);
  return r;
}

Rational esym(const Rational& a, long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("esym: need n, k >= 0");
  if (k > n) return Rational(0);
  // e[j] accumulates the order-j elementary symmetric function as values
  // a, a+1, ... are folded in.
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (long t = 0; t < n; ++t) {
    Rational v = a + t;
    for (long j = std::min(k, t + 1); j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[k];
}

bool degree_probe(const std::function<Rational(long)>& f, long claimed_degree,
                  long window_start, long window_len) {
  if (claimed_degree < 0)
    throw std::invalid_argument("degree_probe: negative degree");
  if (window_len < claimed_degree + 2)
    throw std::invalid_argument("degree_probe: window too small");
  std::vector<Rational> values(window_len);
  for (long t = 0; t < window_len; ++t) values[t] = f(window_start + t);
  if (claimed_degree == 0 &&
      std::all_of(values.begin(), values.end(),
                  [](const Rational& v) { return v == 0; }))
    return false;
  // forward differences in place
  for (long order = 1; order <= claimed_degree + 1; ++order) {
    for (std::size_t t = 0; t + 1 < values.size(); ++t)
      values[t] = values[t + 1] - values[t];
    values.pop_back();
    const bool all_zero =
        std::all_of(values.begin(), values.end(),
                    [](const Rational& v) { return v == 0; });
    if (order == claimed_degree && all_zero) return false;
    if (order == claimed_degree + 1) return all_zero;
  }
  return false;
}

}  // namespace ppdet
