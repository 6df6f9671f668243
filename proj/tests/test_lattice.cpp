#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "ppdet/families.hpp"
#include "ppdet/lattice.hpp"

using namespace ppdet;

TEST_CASE("count_paths") {
  CHECK(count_paths({3, 4}, {3, 4}) == 1);
  CHECK(count_paths({0, 0}, {2, 1}) == 3);
  CHECK(count_paths({0, 0}, {-1, 0}) == 0);
}

namespace {

// Fixed-endpoint brute force: all nonintersecting families with path k
// from starts[k] to ends[k].
long fixed_endpoint_families(const std::vector<Point>& starts,
                             const std::vector<Point>& ends) {
  const std::size_t n = starts.size();
  std::vector<std::vector<std::vector<Point>>> all(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Point> cur{starts[k]};
    const std::function<void()> rec = [&] {
      Point p = cur.back();
      if (p == ends[k]) {
        all[k].push_back(cur);
        return;
      }
      if (p.x1 < ends[k].x1) {
        cur.push_back({p.x1 + 1, p.x2});
        rec();
        cur.pop_back();
      }
      if (p.x2 < ends[k].x2) {
        cur.push_back({p.x1, p.x2 + 1});
        rec();
        cur.pop_back();
      }
    };
    if (ends[k].x1 >= starts[k].x1 && ends[k].x2 >= starts[k].x2) rec();
  }
  long count = 0;
  std::vector<std::size_t> pick(n, 0);
  const std::function<void(std::size_t)> choose = [&](std::size_t k) {
    if (k == n) {
      std::set<std::pair<long, long>> seen;
      for (std::size_t t = 0; t < n; ++t)
        for (const Point& p : all[t][pick[t]])
          if (!seen.insert({p.x1, p.x2}).second) return;
      ++count;
      return;
    }
    for (pick[k] = 0; pick[k] < all[k].size(); ++pick[k]) choose(k + 1);
  };
  if (std::any_of(all.begin(), all.end(),
                  [](const auto& v) { return v.empty(); }))
    return 0;
  choose(0);
  return count;
}

}  // namespace

TEST_CASE("lgv_count") {
  CHECK(lgv_count({{0, 0}}, {{2, 1}}) == count_paths({0, 0}, {2, 1}));
  // forced crossing gives identical rows, hence zero
  CHECK(lgv_count({{0, 0}, {-2, 1}}, {{1, 1}, {1, 1}}) == 0);

  // free-endpoint column points of a staircase target, against the
  // fixed-endpoint brute force
  std::vector<Point> starts, ends;
  const std::vector<long> lambda{1, 3, 4, 7, 9};
  const long x = 2;
  for (long i = 0; i < 3; ++i) {
    starts.push_back({-2 * i, i});
    ends.push_back({x - lambda[i], lambda[i]});
  }
  CHECK(lgv_count(starts, ends) == fixed_endpoint_families(starts, ends));
  // and a denser configuration
  std::vector<Point> s2{{0, 0}, {-2, 1}, {-4, 2}};
  std::vector<Point> e2{{2, 0}, {1, 1}, {-1, 3}};
  CHECK(lgv_count(s2, e2) == fixed_endpoint_families(s2, e2));
}

TEST_CASE("enumerate_families") {
  CHECK(enumerate_families(0, 1).size() == 1);
  CHECK(enumerate_families(0, 2).size() == 2);
  CHECK(enumerate_families(1, 2).size() == 7);
  CHECK(count_families(1, 2) == 7);
  CHECK_THROWS_AS(enumerate_families(0, 5), std::runtime_error);
}

TEST_CASE("paths_to_spp reproduces the reference picture") {
  // x = 2, n = 5, endpoint columns (1, 3, 4, 7, 9)
  PathFamily f;
  using S = Step;
  f.paths.push_back({{0, 0}, {S::East, S::North}});
  f.paths.push_back({{-2, 1}, {S::North, S::North, S::East}});
  f.paths.push_back({{-4, 2}, {S::North, S::East, S::North, S::East}});
  f.paths.push_back(
      {{-6, 3}, {S::North, S::North, S::North, S::North, S::East}});
  f.paths.push_back(
      {{-8, 4}, {S::North, S::North, S::East, S::North, S::North, S::North}});
  ShiftedPlanePartition spp = paths_to_spp(f, 2, 5);
  const std::vector<std::vector<long>> expected{
      {5, 5, 5, 5, 4, 4}, {4, 3, 3, 3, 3}, {3, 3, 3, 2},
      {3, 1, 1},          {1, 1},          {0}};
  CHECK(spp.rows == expected);
  CHECK(spp_valid(spp));
}

TEST_CASE("paths_to_spp edge cases and validation") {
  PathFamily trivial;
  trivial.paths.push_back({{0, 0}, {}});
  ShiftedPlanePartition empty = paths_to_spp(trivial, 0, 1);
  CHECK(empty.rows.empty());

  PathFamily bad;
  bad.paths.push_back({{1, 0}, {}});
  CHECK_THROWS_AS(paths_to_spp(bad, 0, 1), std::invalid_argument);

  PathFamily off_line;
  off_line.paths.push_back({{0, 0}, {Step::East}});
  CHECK_THROWS_AS(paths_to_spp(off_line, 0, 1), std::invalid_argument);
}

TEST_CASE("paths_to_spp is a bijection on enumerable sizes") {
  for (long x = 0; x <= 2; ++x)
    for (long n = 1; n <= 3; ++n) {
      auto families = enumerate_families(x, n);
      std::set<std::vector<std::vector<long>>> images;
      for (const auto& f : families) {
        ShiftedPlanePartition spp = paths_to_spp(f, x, n);
        CHECK(spp_valid(spp));
        images.insert(spp.rows);
      }
      CHECK(Integer(images.size()) == Integer(families.size()));
      CHECK(Integer(images.size()) == enumerate_spp(x, n));
    }
}

TEST_CASE("enumerate_spp") {
  CHECK(enumerate_spp(0, 2) == 2);
  CHECK(enumerate_spp(1, 2) == 7);
  CHECK(enumerate_spp(0, 3) == 7);
  CHECK(enumerate_spp(0, 1) == 1);
  CHECK_THROWS_AS(enumerate_spp(0, 5), std::runtime_error);
}

TEST_CASE("count_nonintersecting_pairs") {
  CHECK(count_nonintersecting_pairs(0, 0, 1) == 2);
  CHECK(Rational(count_nonintersecting_pairs(1, 0, 1)) == q_entry(1, 0, 1));
  CHECK(Rational(count_nonintersecting_pairs(0, 0, 2)) == q_entry(0, 0, 2));
  CHECK_THROWS_AS(count_nonintersecting_pairs(0, 1, 1), std::invalid_argument);
}

TEST_CASE("ct_via_series") {
  for (long x = 0; x <= 2; ++x) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(x));
    CHECK(ct_via_series(x, 1) == Rational(p));
  }
  CHECK(ct_via_series(0, 2) == 2);
  CHECK(ct_via_series(1, 2) == 7);
  CHECK_THROWS_AS(ct_via_series(0, 4), std::runtime_error);  // default guard

  // four-way agreement
  for (long x = 0; x <= 2; ++x)
    for (long n = 1; n <= 3; ++n) {
      Rational ct = ct_via_series(x, n);
      CHECK(ct == minor_sum(matrix_21(x, n), n));
      CHECK(ct == Rational(enumerate_spp(x, n)));
      CHECK(ct == Rational(count_families(x, n)));
    }

  // truncation soundness: widening the box never changes the value
  for (long x = 0; x <= 2; ++x)
    for (long n = 1; n <= 3; ++n) {
      Rational base = ct_via_series(x, n);
      CHECK(ct_via_series(x, n, x + 2 * n + 2) == base);
      CHECK(ct_via_series(x, n, x + 2 * n + 4) == base);
    }
}

TEST_CASE("pfaffian route squares to the determinants") {
  for (long x = 0; x <= 2; ++x) {
    for (long n = 2; n <= 4; n += 2) {
      Rational count(count_families(std::min(x, 3L), std::min(n, 4L)));
      CHECK(count * count == det(matrix_22a(x, n)));
    }
    for (long n = 1; n <= 3; n += 2) {
      Rational count(count_families(x, n));
      Integer four_x;
      mpz_ui_pow_ui(four_x.get_mpz_t(), 4, static_cast<unsigned long>(x));
      CHECK(count * count == Rational(four_x) * det(matrix_22b(x, n)));
    }
  }
}

TEST_CASE("ct_laurent kernels") {
  CHECK(ct_laurent_thm13(1, 1, 1) == 3);
  CHECK(ct_laurent_thm13(2, 2, 0) == 1);
  CHECK(ct_laurent_thm13(0, 0, 1) == 1);
  CHECK(ct_laurent_thm12(0, 0, 1) == -1);

  // hand expansion for the n=1 kernels
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 2; ++y) {
      if (x + y >= 1) {
        CHECK(ct_laurent_thm13(x, y, 1) ==
              Rational(binomial(x + y - 1, y) +
                       2 * binomial(x + y - 1, y - 1)));
        CHECK(ct_laurent_thm12(x, y, 1) ==
              rhs_thm8(x, y, 1) * Rational(2 * x + y + 1) *
                  Rational(x + 2 * y + 1));
      }
    }
  CHECK_THROWS_AS(ct_laurent_thm12(4, 4, 2), std::runtime_error);
}
