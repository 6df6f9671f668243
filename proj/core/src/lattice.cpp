#include "ppdet/lattice.hpp"

#include <algorithm>
#include <set>

#include "ppdet/linalg.hpp"

namespace ppdet {

Point LatticePath::end_point() const {
  Point p = start;
  for (Step s : steps) {
    if (s == Step::East)
      ++p.x1;
    else
      ++p.x2;
  }
  return p;
}

std::vector<Point> LatticePath::points() const {
  std::vector<Point> pts;
  pts.reserve(steps.size() + 1);
  Point p = start;
  pts.push_back(p);
  for (Step s : steps) {
    if (s == Step::East)
      ++p.x1;
    else
      ++p.x2;
    pts.push_back(p);
  }
  return pts;
}

Integer count_paths(Point a, Point e) {
  const long dx = e.x1 - a.x1;
  const long dy = e.x2 - a.x2;
  if (dx < 0 || dy < 0) return Integer(0);
  return binomial(dx + dy, dy);
}

Integer lgv_count(const std::vector<Point>& starts,
                  const std::vector<Point>& ends) {
  if (starts.size() != ends.size())
    throw std::invalid_argument("lgv_count: start/end size mismatch");
  const std::size_t n = starts.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Rational(count_paths(starts[i], ends[j]));
  Rational d = det(m);
  return Integer(d.get_num());
}

namespace {

// Occupancy grid over the rectangle that can hold every path of a family:
// x1 in [-2(n-1), x], x2 in [0, x+2(n-1)].
class Grid {
 public:
  Grid(long x, long n)
      : x1lo_(-2 * (n - 1)), x1hi_(x), x2hi_(x + 2 * (n - 1)),
        width_(x1hi_ - x1lo_ + 1),
        used_((x2hi_ + 1) * width_, false) {}

  bool occupied(Point p) const { return used_[index(p)]; }
  void set(Point p, bool v) { used_[index(p)] = v; }

 private:
  std::size_t index(Point p) const {
    return static_cast<std::size_t>(p.x2) * width_ +
           static_cast<std::size_t>(p.x1 - x1lo_);
  }
  long x1lo_, x1hi_, x2hi_, width_;
  std::vector<bool> used_;
};

// Depth-first placement of path k (start (-2k, k)), then the next path.
// Points are marked while a path is being walked and unmarked on
// backtrack, so the nonintersecting constraint prunes early.
void place_paths(long x, long n, long k, Grid& grid,
                 std::vector<std::vector<Step>>& partial,
                 const std::function<void()>& emit);

void walk_path(long x, long n, long k, Point p, Grid& grid,
               std::vector<std::vector<Step>>& partial,
               const std::function<void()>& emit) {
  if (p.x1 + p.x2 == x) {
    place_paths(x, n, k + 1, grid, partial, emit);
    return;
  }
  for (Step s : {Step::East, Step::North}) {
    Point q = p;
    if (s == Step::East)
      ++q.x1;
    else
      ++q.x2;
    if (grid.occupied(q)) continue;
    grid.set(q, true);
    partial[k].push_back(s);
    walk_path(x, n, k, q, grid, partial, emit);
    partial[k].pop_back();
    grid.set(q, false);
  }
}

void place_paths(long x, long n, long k, Grid& grid,
                 std::vector<std::vector<Step>>& partial,
                 const std::function<void()>& emit) {
  if (k == n) {
    emit();
    return;
  }
  Point start{-2 * k, k};
  if (grid.occupied(start)) return;
  grid.set(start, true);
  walk_path(x, n, k, start, grid, partial, emit);
  grid.set(start, false);
}

void check_family_guard(long x, long n) {
  if (x < 0 || n < 1) throw std::invalid_argument("need x >= 0, n >= 1");
  if (x > 3 || n > 4)
    throw std::runtime_error("enumeration guard exceeded (x <= 3, n <= 4)");
}

}  // namespace

std::vector<PathFamily> enumerate_families(long x, long n) {
  check_family_guard(x, n);
  std::vector<PathFamily> out;
  Grid grid(x, n);
  std::vector<std::vector<Step>> partial(n);
  place_paths(x, n, 0, grid, partial, [&] {
    PathFamily f;
    for (long k = 0; k < n; ++k)
      f.paths.push_back(LatticePath{{-2 * k, k}, partial[k]});
    out.push_back(std::move(f));
  });
  return out;
}

Integer count_families(long x, long n) {
  check_family_guard(x, n);
  Integer count(0);
  Grid grid(x, n);
  std::vector<std::vector<Step>> partial(n);
  place_paths(x, n, 0, grid, partial, [&] { ++count; });
  return count;
}

bool spp_valid(const ShiftedPlanePartition& spp) {
  const long rows = spp.x + spp.n - 1;
  if (static_cast<long>(spp.rows.size()) != std::max(rows, 0L)) return false;
  for (long i = 0; i < rows; ++i) {
    const auto& row = spp.rows[i];
    if (static_cast<long>(row.size()) != spp.x + spp.n - 1 - i) return false;
    const long rowmin = std::max(0L, spp.n - i - 1);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < rowmin || row[j] > spp.n) return false;
      if (j > 0 && row[j] > row[j - 1]) return false;
      // cell above in the same absolute column is (i-1, j+1)
      if (i > 0 && row[j] > spp.rows[i - 1][j + 1]) return false;
    }
  }
  return true;
}

namespace {

// x1-coordinate of the (upward-extended) shifted path at height h+1/2,
// represented by querying at integer h: the vertical segment covering
// (h, h+1), or the endpoint column once the path has ended below.
long path_column_at(const std::vector<Point>& pts, long h) {
  for (std::size_t t = 0; t + 1 < pts.size(); ++t)
    if (pts[t].x1 == pts[t + 1].x1 && pts[t].x2 == h) return pts[t].x1;
  return pts.back().x1;
}

}  // namespace

ShiftedPlanePartition paths_to_spp(const PathFamily& family, long x, long n) {
  if (static_cast<long>(family.paths.size()) != n)
    throw std::invalid_argument("paths_to_spp: family size != n");
  std::set<std::pair<long, long>> seen;
  for (long k = 0; k < n; ++k) {
    const LatticePath& p = family.paths[k];
    if (!(p.start == Point{-2 * k, k}))
      throw std::invalid_argument("paths_to_spp: bad start point");
    Point e = p.end_point();
    if (e.x1 + e.x2 != x)
      throw std::invalid_argument("paths_to_spp: endpoint off the line");
    for (Point q : p.points())
      if (!seen.insert({q.x1, q.x2}).second)
        throw std::invalid_argument("paths_to_spp: intersecting family");
  }

  // Shift path k by (k, -k) and keep the point lists.
  std::vector<std::vector<Point>> shifted(n);
  for (long k = 0; k < n; ++k) {
    shifted[k] = family.paths[k].points();
    for (Point& q : shifted[k]) {
      q.x1 += k;
      q.x2 -= k;
    }
  }

  ShiftedPlanePartition spp;
  spp.x = x;
  spp.n = n;
  const long rows = x + n - 1;
  spp.rows.resize(std::max(rows, 0L));
  for (long i = 1; i <= rows; ++i) {
    const long a = i - n;           // staircase column before reflection
    const long len = x + n - i;     // row length
    spp.rows[i - 1].resize(len);
    for (long j = 1; j <= len; ++j) {
      const long b = len - j;  // cell height before reflection
      long value = 0;
      for (long k = 0; k < n; ++k)
        if (path_column_at(shifted[k], b) > a) ++value;
      spp.rows[i - 1][j - 1] = value;
    }
  }
  if (!spp_valid(spp))
    throw std::logic_error("paths_to_spp: produced an invalid partition");
  return spp;
}

namespace {

void spp_fill(ShiftedPlanePartition& spp, long i, long j,
              const std::function<void()>& emit) {
  const long rows = spp.x + spp.n - 1;
  if (i == rows) {
    emit();
    return;
  }
  long ni = i, nj = j + 1;
  if (nj == static_cast<long>(spp.rows[i].size())) {
    ni = i + 1;
    nj = 0;
  }
  const long rowmin = std::max(0L, spp.n - i - 1);
  long hi = spp.n;
  if (j > 0) hi = std::min(hi, spp.rows[i][j - 1]);
  if (i > 0) hi = std::min(hi, spp.rows[i - 1][j + 1]);
  for (long v = rowmin; v <= hi; ++v) {
    spp.rows[i][j] = v;
    spp_fill(spp, ni, nj, emit);
  }
}

void for_each_spp(long x, long n,
                  const std::function<void(const ShiftedPlanePartition&)>& f) {
  if (x < 0 || n < 1) throw std::invalid_argument("need x >= 0, n >= 1");
  if (x > 3 || n > 4)
    throw std::runtime_error("enumeration guard exceeded (x <= 3, n <= 4)");
  ShiftedPlanePartition spp;
  spp.x = x;
  spp.n = n;
  const long rows = x + n - 1;
  spp.rows.resize(std::max(rows, 0L));
  for (long i = 0; i < rows; ++i) spp.rows[i].resize(x + n - 1 - i);
  if (rows <= 0) {
    f(spp);
    return;
  }
  spp_fill(spp, 0, 0, [&] { f(spp); });
}

}  // namespace

Integer enumerate_spp(long x, long n) {
  Integer count(0);
  for_each_spp(x, n, [&](const ShiftedPlanePartition&) { ++count; });
  return count;
}

std::vector<ShiftedPlanePartition> enumerate_spp_all(long x, long n) {
  std::vector<ShiftedPlanePartition> out;
  for_each_spp(x, n, [&](const ShiftedPlanePartition& s) { out.push_back(s); });
  return out;
}

namespace {

// All monotone paths from (-2k, k) to the line x1 + x2 = x, as point sets.
std::vector<std::vector<Point>> free_paths(long x, long k) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur{Point{-2 * k, k}};
  const std::function<void()> rec = [&] {
    Point p = cur.back();
    if (p.x1 + p.x2 == x) {
      out.push_back(cur);
      return;
    }
    cur.push_back({p.x1 + 1, p.x2});
    rec();
    cur.pop_back();
    cur.push_back({p.x1, p.x2 + 1});
    rec();
    cur.pop_back();
  };
  rec();
  return out;
}

bool disjoint(const std::vector<Point>& a, const std::vector<Point>& b) {
  for (const Point& p : a)
    for (const Point& q : b)
      if (p == q) return false;
  return true;
}

}  // namespace

Integer count_nonintersecting_pairs(long x, long i, long j) {
  if (!(0 <= i && i < j)) throw std::invalid_argument("need 0 <= i < j");
  if (x < 0 || x > 4 || j > 5)
    throw std::runtime_error("enumeration guard exceeded (x <= 4, j <= 5)");
  const auto pi = free_paths(x, i);
  const auto pj = free_paths(x, j);
  Integer count(0);
  for (const auto& a : pi)
    for (const auto& b : pj)
      if (disjoint(a, b)) ++count;
  return count;
}

namespace {

// (1 + z_var)^e as an exact in-box polynomial for e >= 0, or the
// alternating series for e = -1, truncated at the box top (sound for
// constant-term use because no later factor lowers exponents).
LaurentBox one_plus_var_power(const std::vector<int>& lo,
                              const std::vector<int>& hi, std::size_t nvars,
                              std::size_t var, long e) {
  LaurentBox r(lo, hi);
  std::vector<int> exps(nvars, 0);
  if (e >= 0) {
    for (long k = 0; k <= e; ++k) {
      exps[var] = static_cast<int>(k);
      if (exps[var] > hi[var]) break;
      r.add_term(exps, Rational(binomial(e, k)));
    }
  } else if (e == -1) {
    for (long k = 0;; ++k) {
      exps[var] = static_cast<int>(k);
      if (exps[var] > hi[var]) break;
      r.add_term(exps, k % 2 == 0 ? Rational(1) : Rational(-1));
    }
  } else {
    throw std::invalid_argument("one_plus_var_power: exponent < -1");
  }
  return r;
}

Rational ct_series_at_cap(long x, long n, long cap) {
  const std::size_t nv = static_cast<std::size_t>(n);
  std::vector<int> lo(nv, static_cast<int>(-cap)), hi(nv, static_cast<int>(cap));

  LaurentBox acc = LaurentBox::one(lo, hi);
  // numerator: prod_i (1 + 1/z_i)^(x+n-i-1)
  for (long i = 0; i < n; ++i) {
    const long e = x + n - i - 1;
    LaurentBox f(lo, hi);
    std::vector<int> exps(nv, 0);
    for (long k = 0; k <= e; ++k) {
      exps[i] = static_cast<int>(-k);
      f.add_term(exps, Rational(binomial(e, k)));
    }
    acc = laurent_mul(acc, f, MulMode::truncating);
  }
  // numerator: prod_{i<j} (1 - z_j/z_i); this orientation is the one
  // consistent with the decreasing binomial exponents x+n-i-1 (the pair
  // product and the exponent sequence relabel together)
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      LaurentBox f = LaurentBox::one(lo, hi);
      std::vector<int> exps(nv, 0);
      exps[i] = -1;
      exps[j] = 1;
      f.add_term(exps, Rational(-1));
      acc = laurent_mul(acc, f, MulMode::truncating);
    }
  // denominators as truncated geometric series
  for (long i = 0; i < n; ++i) {
    std::vector<int> mono(nv, 0);
    mono[i] = 1;
    acc = laurent_mul(acc, geometric_expand(lo, hi, mono), MulMode::truncating);
  }
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      std::vector<int> mono(nv, 0);
      mono[i] = 1;
      mono[j] = 1;
      acc = laurent_mul(acc, geometric_expand(lo, hi, mono),
                        MulMode::truncating);
    }
  return acc.constant_term();
}

}  // namespace

Rational ct_via_series(long x, long n, std::optional<long> cap) {
  if (x < 0 || n < 1) throw std::invalid_argument("need x >= 0, n >= 1");
  if (!cap && (n > 3 || x > 2))
    throw std::runtime_error(
        "ct_via_series guard exceeded at default cap (n <= 3, x <= 2)");
  const long c = cap ? *cap : x + 2 * n;
  if (c < x + n) throw std::invalid_argument("ct_via_series: cap too small");
  Rational v1 = ct_series_at_cap(x, n, c);
  Rational v2 = ct_series_at_cap(x, n, c + 2);
  if (v1 != v2)
    throw std::runtime_error("ct_via_series: cap-instability, cap " +
                             std::to_string(c) + " vs " + std::to_string(c + 2));
  return v1;
}

namespace {

// Shared expansion for the two weighted kernels. The leading monomial
// carries every negative exponent; all remaining factors have
// nonnegative exponents in every variable, so clipping above 0 cannot
// change the constant term.
Rational ct_weighted_kernel(long x, long y, long n, bool with_extra_weight) {
  if (x < 0 || y < 0 || n < 0) throw std::invalid_argument("need x, y, n >= 0");
  if (n == 0) return Rational(1);
  if (n > 4 || x + y > 6)
    throw std::runtime_error("ct_laurent guard exceeded (n <= 4, x + y <= 6)");
  const std::size_t nv = static_cast<std::size_t>(n);
  const long base_shift = with_extra_weight ? 1 : 2;  // z_i^(-y-2n+i+shift)
  std::vector<int> lo(nv), zero(nv, 0), fhi(nv);
  std::vector<int> shift(nv);
  for (long i = 0; i < n; ++i) {
    shift[i] = static_cast<int>(-y - 2 * n + i + base_shift);
    if (shift[i] > 0)
      throw std::logic_error("ct_weighted_kernel: positive shift");
    lo[i] = shift[i];
    fhi[i] = -shift[i];  // headroom for factor terms that can still reach 0
  }

  // Accumulator lives in [shift, 0]: every factor below has nonnegative
  // exponents, so terms that climb above 0 can never return to the
  // constant term and are dropped by the box intersection.
  LaurentBox acc = LaurentBox::monomial(lo, zero, shift, Rational(1));
  const auto factor_term = [&](LaurentBox& f, const std::vector<int>& exps,
                               const Rational& c) {
    if (f.in_box(exps)) f.add_term(exps, c);
  };
  for (long i = 0; i < n; ++i) {
    acc = laurent_mul(acc, one_plus_var_power(lo, fhi, nv, i, x + y + i - 1),
                      MulMode::truncating);
    // (1 + 2 z_i), and for the heavier kernel also (z_i + 2)(z_i - 1)
    LaurentBox w = LaurentBox::one(lo, fhi);
    std::vector<int> exps(nv, 0);
    exps[i] = 1;
    factor_term(w, exps, Rational(2));
    acc = laurent_mul(acc, w, MulMode::truncating);
    if (with_extra_weight) {
      LaurentBox w2(lo, fhi);
      std::vector<int> e0(nv, 0), e1(nv, 0), e2(nv, 0);
      e1[i] = 1;
      e2[i] = 2;
      // (z + 2)(z - 1) = z^2 + z - 2
      factor_term(w2, e2, Rational(1));
      factor_term(w2, e1, Rational(1));
      factor_term(w2, e0, Rational(-2));
      acc = laurent_mul(acc, w2, MulMode::truncating);
    }
  }
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      // (z_i - z_j)(z_i + z_j + z_i z_j) = z_i^2 + z_i^2 z_j - z_j^2 - z_i z_j^2
      LaurentBox f(lo, fhi);
      std::vector<int> e(nv, 0);
      e[i] = 2;
      factor_term(f, e, Rational(1));
      e[i] = 2;
      e[j] = 1;
      factor_term(f, e, Rational(1));
      e[i] = 0;
      e[j] = 2;
      factor_term(f, e, Rational(-1));
      e[i] = 1;
      e[j] = 2;
      factor_term(f, e, Rational(-1));
      acc = laurent_mul(acc, f, MulMode::truncating);
    }
  return acc.constant_term();
}

}  // namespace

Rational ct_laurent_thm12(long x, long y, long n) {
  return ct_weighted_kernel(x, y, n, true);
}

Rational ct_laurent_thm13(long x, long y, long n) {
  return ct_weighted_kernel(x, y, n, false);
}

}  // namespace ppdet
