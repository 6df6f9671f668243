#pragma once

#include <optional>
#include <vector>

#include "ppdet/laurent.hpp"
#include "ppdet/matrix.hpp"

namespace ppdet {

struct Point {
  long x1 = 0, x2 = 0;
  bool operator==(const Point&) const = default;
};

enum class Step : unsigned char { East, North };

/// Monotone lattice path: unit horizontal and vertical steps in the
/// positive direction.
struct LatticePath {
  Point start;
  std::vector<Step> steps;

  Point end_point() const;
  std::vector<Point> points() const;  // start included
};

/// Family of nonintersecting paths, path k starting at (-2k, k) and
/// ending on the antidiagonal x1 + x2 = x.
struct PathFamily {
  std::vector<LatticePath> paths;
};

/// Number of monotone paths from a to e: C(dx+dy, dy), or 0 when a
/// coordinate would have to decrease.
Integer count_paths(Point a, Point e);

/// Determinant of the pairwise path-count matrix: the number of
/// nonintersecting path families for compatible start/end lists.
Integer lgv_count(const std::vector<Point>& starts,
                  const std::vector<Point>& ends);

/// All nonintersecting families with free endpoints on x1 + x2 = x.
/// Exhaustive; guarded to x <= 3, n <= 4.
std::vector<PathFamily> enumerate_families(long x, long n);
Integer count_families(long x, long n);

/// Shifted plane partition of staircase shape (x+n-1, x+n-2, ..., 1),
/// rows[i] starting at diagonal offset i. Entries lie in [0, n]; rows and
/// columns are weakly decreasing; row i (0-based) is bounded below by
/// n-i-1.
struct ShiftedPlanePartition {
  long x = 0, n = 0;
  std::vector<std::vector<long>> rows;

  bool operator==(const ShiftedPlanePartition&) const = default;
};

bool spp_valid(const ShiftedPlanePartition& spp);

/// The explicit family -> partition map: shift path k by (k, -k), read the
/// region labels of the staircase cells, and reflect. Rejects families
/// that are not valid for (x, n).
ShiftedPlanePartition paths_to_spp(const PathFamily& family, long x, long n);

/// Exhaustive count / listing of shifted plane partitions with the row
/// bounds above. Guarded to x <= 3, n <= 4.
Integer enumerate_spp(long x, long n);
std::vector<ShiftedPlanePartition> enumerate_spp_all(long x, long n);

/// Brute-force count of nonintersecting pairs (P_i, P_j) with free
/// endpoints on x1 + x2 = x. Guarded to x <= 4, j <= 5.
Integer count_nonintersecting_pairs(long x, long i, long j);

/// Constant term of the n-variable kernel
///   prod_{i<j} (1 - z_i/z_j) prod_i (1 + 1/z_i)^(x+n-i-1)
///   / (prod_{i<j} (1 - z_i z_j) prod_i (1 - z_i))
/// expanded as a box-truncated series (numerator exact, denominators via
/// geometric_expand). The value is computed at the cap and at cap+2 and
/// must agree; disagreement is reported as an error. Without an explicit
/// cap the guard n <= 3, x <= 2 applies and the cap defaults to x + 2n.
Rational ct_via_series(long x, long n, std::optional<long> cap = std::nullopt);

/// Exact constant terms of the two weighted antisymmetrized kernels
/// (pure Laurent expansion, no truncation of anything that can reach the
/// constant term). Guarded to n <= 4, x + y <= 6.
Rational ct_laurent_thm12(long x, long y, long n);
Rational ct_laurent_thm13(long x, long y, long n);

}  // namespace ppdet
