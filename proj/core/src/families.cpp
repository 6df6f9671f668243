#include "ppdet/families.hpp"

namespace ppdet {

namespace {

Integer pow2(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

long floor_div2(long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
long ceil_div2(long v) { return -floor_div2(-v); }

Rational rat_fact(long k) { return Rational(factorial(k)); }

}  // namespace

Matrix matrix_21(long x, long n) {
  if (x < 0 || n < 0) throw std::invalid_argument("matrix_21: need x, n >= 0");
  const long cols = 2 * n + x - 1;
  Matrix m(n, cols < 0 ? 0 : cols);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < cols; ++j) m.at(i, j) = Rational(binomial(x + i, j - i));
  return m;
}

Rational q_entry(long x, long i, long j) {
  return directed_sum({x + 2 * i - j, x + 2 * j - i}, [&](long r) {
    return Rational(binomial(2 * x + i + j, r));
  });
}

Matrix matrix_22a(long x, long n) {
  Matrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m.at(i, j) = q_entry(x, i, j);
  return m;
}

Matrix matrix_22b(long x, long n) {
  if (n < 1) throw std::invalid_argument("matrix_22b: need n >= 1");
  const long order = n - 1;
  Matrix m(order, order);
  for (long i = 0; i < order; ++i)
    for (long j = 0; j < order; ++j) {
      Rational num = Rational(factorial(2 * x + i + j + 1)) *
                     Rational(3 * x + 3 * i + 4) * Rational(3 * x + 3 * j + 4) *
                     Rational(3 * j - 3 * i);
      m.at(i, j) = num * factorial_reciprocal(x + 2 * i - j + 2) *
                   factorial_reciprocal(x + 2 * j - i + 2);
    }
  return m;
}

SkewMatrix q_matrix_even(long x, long n) {
  SkewMatrix m(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) m.set_upper(i, j, q_entry(x, i, j));
  return m;
}

SkewMatrix q_matrix_odd(long x, long n) {
  SkewMatrix m(static_cast<std::size_t>(n + 1));
  for (long j = 0; j < n; ++j)
    m.set_upper(0, j + 1, Rational(pow2(x + j)));
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) m.set_upper(i + 1, j + 1, q_entry(x, i, j));
  return m;
}

Matrix d_matrix(long x, long y, long n) {
  Matrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m.at(i, j) = directed_sum({x + 2 * i - j, y + 2 * j - i}, [&](long r) {
        return Rational(binomial(x + y + i + j, r));
      });
  return m;
}

Matrix d_matrix_alt4(long x, long y, long n) {
  if (x < 0 || y < 0)
    throw std::invalid_argument("d_matrix_alt4: need x, y >= 0");
  Matrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == 0 && j == 0) {
        m.at(i, j) = directed_sum({x, y}, [&](long r) {
          return Rational(binomial(x + y, r));
        });
      } else if (i == 0) {
        m.at(i, j) = Rational(factorial(x + y + j)) *
                     Rational(x + 2 * y + 3 * j + 1) *
                     factorial_reciprocal(x - j + 1) *
                     factorial_reciprocal(y + 2 * j);
      } else if (j == 0) {
        m.at(i, j) = -Rational(factorial(x + y + i)) *
                     Rational(2 * x + y + 3 * i + 1) *
                     factorial_reciprocal(x + 2 * i) *
                     factorial_reciprocal(y - i + 1);
      } else {
        m.at(i, j) = Rational(factorial(x + y + i + j - 1)) *
                     Rational(y - x + 3 * j - 3 * i) *
                     Rational(2 * x + y + 3 * i + 1) *
                     Rational(x + 2 * y + 3 * j + 1) *
                     factorial_reciprocal(x + 2 * i - j + 1) *
                     factorial_reciprocal(y + 2 * j - i + 1);
      }
    }
  return m;
}

Matrix d_matrix_alt5(long x, long y, long n) {
  if (x < 0 || y < 0)
    throw std::invalid_argument("d_matrix_alt5: need x, y >= 0");
  Matrix m(n, n);
  const Rational half = make_rational(1, 2);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i <= n - 2 && j <= n - 2) {
        m.at(i, j) = half * half * Rational(factorial(x + y + i + j + 1)) *
                     Rational(y - x + 3 * j - 3 * i) *
                     Rational(2 * x + y + 3 * i + 4) *
                     Rational(x + 2 * y + 3 * j + 4) *
                     factorial_reciprocal(x + 2 * i - j + 2) *
                     factorial_reciprocal(y + 2 * j - i + 2);
      } else if (i <= n - 2 && j == n - 1) {
        m.at(i, j) = half * Rational(factorial(x + y + i + n)) *
                     Rational(2 * x + y + 3 * i + 4) *
                     factorial_reciprocal(x + 2 * i - n + 3) *
                     factorial_reciprocal(y + 2 * n - i - 2);
      } else if (i == n - 1 && j <= n - 2) {
        m.at(i, j) = -half * Rational(factorial(x + y + j + n)) *
                     Rational(x + 2 * y + 3 * j + 4) *
                     factorial_reciprocal(x + 2 * n - j - 2) *
                     factorial_reciprocal(y + 2 * j - n + 3);
      } else {
        m.at(i, j) =
            directed_sum({x + n - 1, y + n - 1}, [&](long r) {
              return Rational(binomial(x + y + 2 * n - 2, r));
            });
      }
    }
  return m;
}

Rational s_sum(long x, long y, long n) {
  const long h = floor_div2(y - x);
  Rational acc(0);
  for (long r = 1; r <= h; ++r)
    acc += pochhammer(Rational(x + r + 1), h - r) *
           pochhammer(Rational(y - r + 1), 2 * n + r - 2);
  for (long r = 0; r <= ceil_div2(y - x) - 1; ++r)
    acc += pochhammer(Rational(x + r + 1), h - r) *
           pochhammer(Rational(y - r + 1), 2 * n + r - 2);
  return acc;
}

Rational t_sum(long x, long y) {
  const long h = floor_div2(y - x);
  Rational acc(0);
  for (long r = 1; r <= h; ++r)
    acc += pochhammer(Rational(x + r + 1), h - r) *
           pochhammer(Rational(y - r + 1), r);
  for (long r = 0; r <= ceil_div2(y - x) - 1; ++r)
    acc += pochhammer(Rational(x + r + 1), h - r) *
           pochhammer(Rational(y - r + 1), r);
  return acc;
}

Rational u_sum(const Rational& x, const Rational& y, long n) {
  const Rational diff = y - x;
  if (!is_integer(diff) || diff < 0)
    throw std::invalid_argument("u_sum: y - x must be a nonnegative integer");
  const long m = to_long(diff);
  Rational acc(0);
  for (long r = 0; r <= m - 1; ++r)
    acc += pochhammer(x + n + r, n - r - 1) * pochhammer(y + n - r, r + n - 1);
  if (acc == 0) return acc;
  return pochhammer_ext(x + y + n + 1, n - 2) * acc;
}

Matrix e_matrix(long x, long y, long n) {
  if (x < 0 || y < 0 || n < 0)
    throw std::invalid_argument("e_matrix: need x, y, n >= 0");
  Matrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const long top = x + y + i + j - 1;
      const long lin = y - x + 3 * j - 3 * i;
      if (top < 0) {
        // only x=y=0, i=j=0 lands here; its linear factor is 0
        m.at(i, j) = Rational(0);
        continue;
      }
      m.at(i, j) = Rational(factorial(top)) * Rational(lin) *
                   factorial_reciprocal(x + 2 * i - j + 1) *
                   factorial_reciprocal(y + 2 * j - i + 1);
    }
  return m;
}

Matrix ab_matrix(long x, long y, long n, AbVariant variant) {
  if (x < 0 || y < 0 || n < 0)
    throw std::invalid_argument("ab_matrix: need x, y, n >= 0");
  Matrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (variant == AbVariant::factorial) {
        const long top = x + y + i + j - 1;
        if (top < 0) {
          m.at(i, j) = Rational(0);  // degenerate x=y=0, i=j=0 entry
          continue;
        }
        m.at(i, j) = Rational(factorial(top)) *
                     factorial_reciprocal(x + 2 * i - j) *
                     factorial_reciprocal(y + 2 * j - i);
      } else {
        m.at(i, j) =
            Rational(binomial(x + y + i + j, y + 2 * j - i) +
                     binomial(x + y + i + j - 1, y + 2 * j - i - 1));
      }
    }
  return m;
}

Matrix andrews_burge_matrix(long x, long n) {
  Matrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m.at(i, j) = Rational(binomial(x + i + j + 1, 2 * j - i + 1) +
                            binomial(x + i + j, 2 * j - i));
  return m;
}

Rational rhs_thm11(long x, long n) {
  if (x < 0 || n < 0) throw std::invalid_argument("rhs_thm11: need x, n >= 0");
  if (n == 0) return Rational(1);
  Rational acc(1);
  if (n % 2 == 0) {
    for (long i = 0; i <= n - 1; ++i)
      acc *= Rational(factorial(3 * x + 3 * i + 1)) *
             factorial_reciprocal(3 * x + 2 * i + 1) *
             factorial_reciprocal(x + 2 * i);
    for (long i = 0; i <= (n - 2) / 2; ++i)
      acc *= rat_fact(2 * x + 2 * i + 1) * rat_fact(2 * i);
  } else {
    acc = Rational(pow2(x));
    for (long i = 1; i <= n - 1; ++i)
      acc *= Rational(factorial(3 * x + 3 * i + 1)) *
             factorial_reciprocal(3 * x + 2 * i + 1) *
             factorial_reciprocal(x + 2 * i);
    for (long i = 1; i <= (n - 1) / 2; ++i)
      acc *= rat_fact(2 * x + 2 * i) * rat_fact(2 * i - 1);
  }
  return acc;
}

Rational rhs_cor3(long x, long m, long n) {
  if (m < 0 || m > 4) throw std::invalid_argument("rhs_cor3: m must be 0..4");
  if (n < m) throw std::invalid_argument("rhs_cor3: need n >= m");
  if (x < 0) throw std::invalid_argument("rhs_cor3: need x >= 0");

  if (m == 0) {
    if (n % 2 == 1) return Rational(0);
    Rational acc(1);
    for (long i = 0; i <= n - 1; ++i) {
      Rational p = pochhammer(Rational(3 * x + 2 * i + 2), i);
      acc *= p * p * factorial_reciprocal(x + 2 * i) *
             factorial_reciprocal(x + 2 * i);
    }
    for (long i = 0; i <= n / 2 - 1; ++i) {
      Rational f = rat_fact(2 * i) * rat_fact(2 * x + 2 * i + 1);
      acc *= f * f;
    }
    return acc;
  }

  // Shared m >= 1 skeleton:
  //   prod_i i! (2x+m+i)! (3x+m+2i+2)_i (3x+2m+2i+2)_i / ((x+2i)! (x+m+2i)!)
  //   * prod_i (2x + 2*ceil(m/2) + 2i + 1) / (2 floor(n/2) - 1)!!
  Rational acc(1);
  for (long i = 0; i <= n - 1; ++i)
    acc *= rat_fact(i) * rat_fact(2 * x + m + i) *
           pochhammer(Rational(3 * x + m + 2 * i + 2), i) *
           pochhammer(Rational(3 * x + 2 * m + 2 * i + 2), i) *
           factorial_reciprocal(x + 2 * i) * factorial_reciprocal(x + m + 2 * i);
  const long half = n / 2;
  for (long i = 0; i <= half - 1; ++i)
    acc *= Rational(2 * x + 2 * ceil_div2(m) + 2 * i + 1);
  acc /= Rational(double_factorial(2 * half - 1));

  switch (m) {
    case 1:
      return acc;
    case 2:
      acc /= Rational(x + 1);
      return acc * (n % 2 == 0 ? Rational(x + n + 1) : Rational(2 * x + n + 2));
    case 3:
      acc /= Rational(x + 1);
      return acc *
             (n % 2 == 0 ? Rational(x + 2 * n + 1) : Rational(3 * x + 2 * n + 5));
    default: {  // m == 4
      acc /= Rational(x + 1) * Rational(x + 2);
      if (n % 2 == 0) {
        Integer xv(x);
        Integer quad = xv * xv + (4 * n + 3) * xv + 2 * (n * n + 4 * n + 1);
        return acc * Rational(quad);
      }
      return acc * Rational(2 * x + n + 4) * Rational(2 * x + 2 * n + 4);
    }
  }
}

Rational sum_thm8(const Rational& x, const Rational& y, long n) {
  Rational acc(0);
  for (long k = 0; k <= n; ++k) {
    Rational term = Rational(binomial(n, k)) * pochhammer(x, k) *
                    pochhammer(y, n - k);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

namespace {

// x = y = 0 limit of the det e_matrix closed form (n >= 1).
Rational e_det_at_origin(long n) {
  if (n % 2 == 1) return Rational(0);
  Rational acc(1);
  for (long i = 0; i <= n - 1; ++i) {
    Rational p = pochhammer(Rational(2 * i + 1), i);
    acc *= p * p * factorial_reciprocal(2 * i + 1) *
           factorial_reciprocal(2 * i + 1);
  }
  for (long i = 0; i <= n / 2 - 1; ++i) {
    Rational f = rat_fact(2 * i) * rat_fact(2 * i + 1);
    acc *= f * f;
  }
  return acc;
}

}  // namespace

Rational rhs_thm8(long x, long y, long n) {
  if (x < 0 || y < 0 || n < 0)
    throw std::invalid_argument("rhs_thm8: need x, y, n >= 0");
  if (n == 0) return Rational(1);
  if (x == 0 && y == 0) return e_det_at_origin(n);
  Rational acc(1);
  for (long i = 0; i <= n - 1; ++i)
    acc *= rat_fact(i) * rat_fact(x + y + i - 1) *
           pochhammer(Rational(2 * x + y + 2 * i + 1), i) *
           pochhammer(Rational(x + 2 * y + 2 * i + 1), i) *
           factorial_reciprocal(x + 2 * i + 1) *
           factorial_reciprocal(y + 2 * i + 1);
  return acc * sum_thm8(Rational(x), Rational(y), n);
}

Rational sum_thm9(const Rational& x, long m, long n) {
  const long chi = (n % 2 == 1) ? 1 : 0;
  const long fm = m / 2;
  const long fn = n / 2;
  Rational acc(0);
  for (long k = 0; 2 * k + chi <= m; ++k)
    acc += Rational(binomial(m, 2 * k + chi)) *
           pochhammer(Rational(fn - k + 1), k) *
           pochhammer(x + ceil_div2(m) + fn, fm - k);
  return acc;
}

Thm9SumCheck thm9_sum(const Rational& x, long m, long n) {
  if (m < 0 || n < 0 || m > n)
    throw std::invalid_argument("thm9_sum: need 0 <= m <= n");
  Thm9SumCheck r{sum_thm8(x, x + m, n),
                 Rational(factorial(n)) * factorial_reciprocal(n / 2) *
                     pochhammer(x + m, n / 2 - m / 2) * sum_thm9(x, m, n),
                 false};
  r.equal = (r.lhs == r.rhs);
  return r;
}

Rational rhs_thm9(long x, long m, long n) {
  if (m < 0 || n < 0 || m > n)
    throw std::invalid_argument("rhs_thm9: need 0 <= m <= n");
  if (x < 0) throw std::invalid_argument("rhs_thm9: need x >= 0");
  if (n == 0) return Rational(1);
  if (x == 0 && m == 0) return e_det_at_origin(n);
  Rational acc = Rational(factorial(n)) * factorial_reciprocal(n / 2);
  for (long i = 0; i <= n - 1; ++i)
    acc *= rat_fact(i) * rat_fact(2 * x + m + i - 1) *
           pochhammer(Rational(3 * x + m + 2 * i + 1), i) *
           pochhammer(Rational(3 * x + 2 * m + 2 * i + 1), i) *
           factorial_reciprocal(x + 2 * i + 1) *
           factorial_reciprocal(x + m + 2 * i + 1);
  return acc * pochhammer(Rational(x + m), n / 2 - m / 2) *
         sum_thm9(Rational(x), m, n);
}

Rational rhs_cor6(long x, long m, long n) {
  if (m != 0 && m != 1) throw std::invalid_argument("rhs_cor6: m must be 0 or 1");
  if (x < 0 || n < 0) throw std::invalid_argument("rhs_cor6: need x, n >= 0");
  if (n == 0) return Rational(1);
  if (m == 0) {
    if (n % 2 == 1) return Rational(0);
    Rational acc(1);
    for (long i = 0; i <= n - 1; ++i) {
      Rational p = pochhammer(Rational(3 * x + 2 * i + 1), i);
      acc *= p * p * factorial_reciprocal(x + 2 * i + 1) *
             factorial_reciprocal(x + 2 * i + 1);
    }
    for (long i = 0; i <= n / 2 - 1; ++i) {
      Rational f = rat_fact(2 * x + 2 * i) * rat_fact(2 * i + 1);
      acc *= f * f;
    }
    return acc;
  }
  Rational acc = Rational(factorial(n)) * factorial_reciprocal(n / 2);
  for (long i = 0; i <= n - 1; ++i)
    acc *= rat_fact(i) * rat_fact(2 * x + i) *
           pochhammer(Rational(3 * x + 2 * i + 2), i) *
           pochhammer(Rational(3 * x + 2 * i + 3), i) *
           factorial_reciprocal(x + 2 * i + 1) *
           factorial_reciprocal(x + 2 * i + 2);
  return acc * pochhammer(Rational(x + 1), n / 2);
}

Rational rhs_thm10(long x, long y, long n, AbVariant variant) {
  if (x < 0 || y < 0 || n < 0)
    throw std::invalid_argument("rhs_thm10: need x, y, n >= 0");
  if (n == 0) return Rational(1);
  const bool binom = (variant == AbVariant::binomial);
  if (x == 0 && y == 0) {
    if (!binom) return Rational(0);  // both sides degenerate to zero rows
    Rational acc(1);
    for (long i = 1; i <= n - 1; ++i)
      acc *= rat_fact(i) * rat_fact(i - 1) * pochhammer(Rational(2 * i), i) *
             pochhammer(Rational(2 * i), i + 1) * factorial_reciprocal(2 * i) *
             factorial_reciprocal(2 * i);
    return acc;
  }
  Rational acc(1);
  for (long i = 0; i <= n - 1; ++i)
    acc *= rat_fact(i) * rat_fact(x + y + i - 1) *
           pochhammer(Rational(2 * x + y + 2 * i), i) *
           pochhammer(Rational(x + 2 * y + 2 * i), binom ? i + 1 : i) *
           factorial_reciprocal(x + 2 * i) * factorial_reciprocal(y + 2 * i);
  return acc;
}

Rational rhs_thm12(long x, long y, long n) {
  if (x < 0 || y < 0 || n < 0)
    throw std::invalid_argument("rhs_thm12: need x, y, n >= 0");
  if (n == 0) return Rational(1);
  if (x == 0 && y == 0) {
    // y -> 0, then x -> 0 limit: (-1)^n (n-1)! times the regular factors.
    Rational acc = Rational(factorial(n - 1));
    if (n % 2 == 1) acc = -acc;
    for (long i = 1; i <= n - 1; ++i) {
      Rational p = pochhammer(Rational(2 * i + 1), i + 1);
      acc *= rat_fact(i) * rat_fact(i - 1) * p * p *
             factorial_reciprocal(2 * i + 1) * factorial_reciprocal(2 * i + 1);
    }
    return acc;
  }
  Rational acc(1);
  for (long i = 0; i <= n - 1; ++i)
    acc *= rat_fact(i) * rat_fact(x + y + i - 1) *
           pochhammer(Rational(2 * x + y + 2 * i + 1), i + 1) *
           pochhammer(Rational(x + 2 * y + 2 * i + 1), i + 1) *
           factorial_reciprocal(x + 2 * i + 1) *
           factorial_reciprocal(y + 2 * i + 1);
  return acc * sum_thm8(Rational(x), Rational(y), n);
}

Rational rhs_thm13(long x, long y, long n) {
  return rhs_thm10(x, y, n, AbVariant::binomial);
}

}  // namespace ppdet
