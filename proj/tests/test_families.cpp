#include <doctest.h>

#include "oracles.hpp"
#include "ppdet/families.hpp"
#include "ppdet/lattice.hpp"
#include "ppdet/linalg.hpp"

using namespace ppdet;

TEST_CASE("matrix_21") {
  Matrix m = matrix_21(0, 1);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 1);
  CHECK(m.at(0, 0) == 1);

  Matrix m2 = matrix_21(1, 2);
  CHECK(m2.cols() == 4);
  for (long j = 0; j < 4; ++j) {
    CHECK(m2.at(0, j) == Rational(binomial(1, j)));
    CHECK(m2.at(1, j) == Rational(binomial(2, j - 1)));
  }
}

TEST_CASE("matrix_22a and matrix_22b") {
  CHECK(det(matrix_22a(0, 2)) == 4);
  CHECK(det(matrix_22b(0, 3)) == 49);
  for (long i = 0; i < 3; ++i) CHECK(matrix_22a(1, 3).at(i, i) == 0);
  // d_matrix at y = x agrees entrywise
  Matrix a = matrix_22a(2, 4);
  Matrix d = d_matrix(2, 2, 4);
  CHECK(a == d);
}

TEST_CASE("q_entry") {
  CHECK(q_entry(0, 0, 1) == 2);
  CHECK(q_entry(1, 2, 2) == 0);
  CHECK(q_entry(0, 1, 2) == -q_entry(0, 2, 1));
  CHECK(pfaffian(q_matrix_odd(0, 3)) == 7);
  // brute-force pair counts
  for (long x = 0; x <= 2; ++x)
    for (long i = 0; i <= 1; ++i)
      for (long j = i + 1; j <= 3; ++j)
        CHECK(q_entry(x, i, j) ==
              Rational(count_nonintersecting_pairs(x, i, j)));
}

TEST_CASE("d_matrix and corollary products") {
  CHECK(det(d_matrix(0, 0, 2)) == 4);
  CHECK(det(d_matrix(0, 0, 3)) == 0);
  CHECK(det(d_matrix(1, 1, 2)) == 49);
  CHECK(rhs_cor3(0, 0, 2) == 4);
  CHECK(rhs_cor3(1, 0, 3) == 0);
  CHECK(rhs_cor3(0, 2, 2) == det(d_matrix(0, 2, 2)));
  CHECK_THROWS_AS(rhs_cor3(0, 5, 6), std::invalid_argument);

  for (long m = 0; m <= 4; ++m)
    for (long n = std::max(m, m == 0 ? 0L : 1L); n <= 5; ++n)
      for (long x = 0; x <= 2; ++x)
        CHECK(det(d_matrix(x, x + m, n)) == rhs_cor3(x, m, n));
}

TEST_CASE("d_matrix antisymmetry in x and y") {
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y)
      for (long n = 1; n <= 5; ++n) {
        Rational lhs = det(d_matrix(x, y, n));
        Rational rhs = det(d_matrix(y, x, n));
        if (n % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("equivalent forms of the d determinant") {
  CHECK(det(d_matrix_alt4(1, 1, 2)) == det(d_matrix(1, 1, 2)));
  CHECK(det(d_matrix_alt5(1, 1, 2)) == det(d_matrix(1, 1, 2)));
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y)
      for (long n = 1; n <= 4; ++n) {
        Rational expect = det(d_matrix(x, y, n));
        CHECK(det(d_matrix_alt4(x, y, n)) == expect);
        CHECK(det(d_matrix_alt5(x, y, n)) == expect);
      }
}

TEST_CASE("border sums") {
  for (long n = 1; n <= 5; ++n) CHECK(s_sum(0, 0, n) == 0);
  CHECK(t_sum(0, 0) == 0);
  CHECK(t_sum(0, 1) == 1);
  // the 1x1 reduced form ties u_sum to t_sum
  for (long x = 0; x <= 3; ++x) {
    Rational u = u_sum(Rational(x), Rational(x + 1), 1);
    CHECK(u * Rational(2 * x + 2) == t_sum(x, x + 1));
  }
}

TEST_CASE("e_matrix") {
  CHECK(det(e_matrix(1, 1, 2)) == make_rational(1, 16));
  CHECK(det(e_matrix(1, 2, 1)) == make_rational(1, 6));
  CHECK(det(e_matrix(0, 0, 3)) == 0);
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y)
      for (long n = 1; n <= 5; ++n) {
        Rational lhs = det(e_matrix(x, y, n));
        Rational rhs = det(e_matrix(y, x, n));
        if (n % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("rhs_thm8") {
  CHECK(rhs_thm8(1, 2, 1) == make_rational(1, 6));
  CHECK(rhs_thm8(3, 4, 0) == 1);
  CHECK(rhs_thm8(1, 1, 2) == make_rational(1, 16));
  for (long x = 0; x <= 3; ++x)
    for (long y = 0; y <= 3; ++y)
      for (long n = 0; n <= 5; ++n)
        CHECK(det(e_matrix(x, y, n)) == rhs_thm8(x, y, n));
}

TEST_CASE("thm9") {
  Thm9SumCheck c = thm9_sum(Rational(1), 1, 2);
  CHECK(c.lhs == 4);
  CHECK(c.rhs == 4);
  CHECK(c.equal);

  CHECK(rhs_thm9(0, 0, 3) == 0);
  CHECK(rhs_thm9(0, 0, 3) == rhs_cor6(0, 0, 3));
  CHECK_THROWS_AS(rhs_thm9(1, 3, 2), std::invalid_argument);

  int points = 0;
  for (long n = 0; n <= 6 && points < 20; ++n)
    for (long m = 0; m <= n && points < 20; ++m)
      for (long x = 0; x <= 4 && points < 20; ++x) {
        CHECK(rhs_thm9(x, m, n) == rhs_thm8(x, x + m, n));
        ++points;
      }
}

TEST_CASE("rhs_cor6") {
  CHECK(rhs_cor6(1, 0, 2) == make_rational(1, 16));
  CHECK(rhs_cor6(2, 0, 3) == 0);
  CHECK(rhs_cor6(0, 1, 1) == det(e_matrix(0, 1, 1)));
  CHECK_THROWS_AS(rhs_cor6(0, 2, 3), std::invalid_argument);
  for (long x = 0; x <= 3; ++x)
    for (long n = 0; n <= 5; ++n) {
      CHECK(rhs_cor6(x, 0, n) == det(e_matrix(x, x, n)));
      CHECK(rhs_cor6(x, 1, n) == det(e_matrix(x, x + 1, n)));
    }
}

TEST_CASE("ab_matrix and rhs_thm10") {
  CHECK(det(ab_matrix(1, 1, 2, AbVariant::factorial)) == make_rational(25, 18));
  CHECK(rhs_thm10(1, 1, 2, AbVariant::factorial) == make_rational(25, 18));
  for (long x = 1; x <= 4; ++x)
    for (long y = 1; y <= 4; ++y)
      CHECK(det(ab_matrix(x, y, 1, AbVariant::factorial)) ==
            Rational(factorial(x + y - 1)) * factorial_reciprocal(x) *
                factorial_reciprocal(y));

  // binomial / factorial determinant ratio carries the linear column factors
  Rational ratio = det(ab_matrix(1, 1, 2, AbVariant::binomial)) /
                   det(ab_matrix(1, 1, 2, AbVariant::factorial));
  Rational expect(1);
  for (long j = 0; j < 2; ++j) expect *= Rational(1 + 2 * 1 + 3 * j);
  CHECK(ratio == expect);

  // the one-lower-parameter binomial grid point
  for (long n = 1; n <= 4; ++n) {
    CHECK(det(andrews_burge_matrix(2, n)) ==
          rhs_thm10(2, 1, n, AbVariant::binomial));
    CHECK(det(ab_matrix(1, 0, n, AbVariant::binomial)) ==
          rhs_thm11(0, n) * rhs_thm11(0, n));
  }
}

TEST_CASE("rhs_thm11") {
  const long expected[] = {1, 2, 7, 42, 429};
  for (long n = 1; n <= 5; ++n) CHECK(rhs_thm11(0, n) == expected[n - 1]);
  for (long x = 0; x <= 6; ++x) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(x));
    CHECK(rhs_thm11(x, 1) == Rational(p));
  }
  CHECK(rhs_thm11(1, 2) == 7);
}

TEST_CASE("rhs_thm12 and rhs_thm13") {
  // n = 1 closed forms against small hand expansions
  for (long x = 0; x <= 3; ++x)
    for (long y = 0; y <= 3; ++y) {
      if (x == 0 && y == 0) continue;
      Rational hand12 = Rational(2 * binomial(x + y - 1, y - 2) +
                                 3 * binomial(x + y - 1, y - 1) -
                                 3 * binomial(x + y - 1, y) -
                                 2 * binomial(x + y - 1, y + 1));
      CHECK(rhs_thm12(x, y, 1) == hand12);
      Rational hand13 = Rational(binomial(x + y - 1, y) +
                                 2 * binomial(x + y - 1, y - 1));
      CHECK(rhs_thm13(x, y, 1) == hand13);
    }
  CHECK(rhs_thm13(1, 1, 1) == 3);
  CHECK(rhs_thm13(2, 1, 0) == 1);
  CHECK(rhs_thm12(0, 0, 1) == -1);
  CHECK(rhs_thm13(0, 0, 1) == 1);

  // thm12 at n = 1 is the thm8 value dressed with the two linear factors
  for (long x = 0; x <= 3; ++x)
    for (long y = 0; y <= 3; ++y) {
      if (x == 0 && y == 0) continue;
      CHECK(rhs_thm12(x, y, 1) ==
            rhs_thm8(x, y, 1) * Rational(2 * x + y + 1) *
                Rational(x + 2 * y + 1));
    }
}

TEST_CASE("prefactor nonvanishing at half-integer nodes") {
  // the step-6 denominators never vanish at x = -floor((m+n)/2)+t-1/2
  for (long m = 0; m <= 4; ++m)
    for (long n = std::max(m, 1L); n <= 6; ++n)
      for (long t = 0; t <= m / 2; ++t) {
        Rational x = Rational(-((m + n) / 2) + t) - make_rational(1, 2);
        Rational denom = pochhammer(x + m / 2 + 1, 2 * n - 2 - m / 2) *
                         pochhammer(x + m + 1, 2 * n - 2);
        for (long i = 1; i <= n - 1; ++i)
          denom *= pochhammer(3 * x + m + 2 * i + 2, i - 1) *
                   pochhammer(3 * x + 2 * m + 2 * i + 2, i - 1);
        CHECK(denom != 0);
      }
}
