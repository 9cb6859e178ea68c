#pragma once

#include <optional>
#include <vector>

#include "midconvex/geometry.hpp"

namespace midconvex {

/// Sorted, duplicate-free point set.
using PointSet = std::vector<Point>;

/// Sorts lexicographically and drops repeats.
PointSet make_point_set(std::vector<Point> points);

/// {a + b : a in A, b in B} with repeats collapsed.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

enum class SubsetMethod { DynamicProgramming, BruteForce };
const char* to_string(SubsetMethod m);

struct ConvexSubsetResult {
  Level mode = Level::Weak;
  int size = 0;
  /// Sorted lexicographically.
  std::vector<Point> witness;
  SubsetMethod method = SubsetMethod::DynamicProgramming;
};

/// Longest convex chain dynamic program. Every point of the set serves once as
/// the lowest vertex; the other points above it are ordered by angle and the
/// table holds the best chain ending in each ordered pair. Weak mode admits
/// straight turns and adds the points hidden on the closing edge.
/// Returns nothing when the reconstructed witness does not verify.
std::optional<ConvexSubsetResult> dp_largest(const PointSet& points, Level mode);

/// Exhaustive search; throws std::invalid_argument above 20 points.
ConvexSubsetResult brute_force_largest(const PointSet& points, Level mode);

/// DP with a brute-force fallback (logged to std::clog) if the witness fails.
/// Mode must be Strict or Weak; throws std::invalid_argument on empty input.
ConvexSubsetResult largest_convex_subset(const PointSet& points, Level mode);

struct GtildeReport {
  int n = 0;
  int sum_size = 0;
  int weak_max = 0;
  int strict_max = 0;
  /// weak_max <= 2n and strict_max <= 2n - 2 (for n >= 2).
  bool bounds_ok = false;
  bool weak_attains = false;    // weak_max == 2n
  bool strict_attains = false;  // strict_max >= floor(3n/2)
};

/// Throws std::invalid_argument unless A is strictly convex.
GtildeReport gtilde_experiment(const PointSet& a);

}  // namespace midconvex
