#include "midconvex/minkowski.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace midconvex {
namespace {

void check_mode(Level mode) {
  if (mode == Level::Arbitrary) throw std::invalid_argument("convex subset mode must be strict or weak");
}

// Orientation signs of all ordered triples.
class OrientTable {
 public:
  explicit OrientTable(const PointSet& p) : n_(static_cast<int>(p.size())), t_(std::size_t(n_) * n_ * n_, 0) {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        for (int k = j + 1; k < n_; ++k) {
          const signed char s = static_cast<signed char>(orient(p[i], p[j], p[k]));
          // Even permutations keep the sign, odd ones flip it.
          at(i, j, k) = at(j, k, i) = at(k, i, j) = s;
          at(j, i, k) = at(i, k, j) = at(k, j, i) = static_cast<signed char>(-s);
        }
      }
    }
  }
  int operator()(int i, int j, int k) const { return t_[(std::size_t(i) * n_ + j) * n_ + k]; }

 private:
  signed char& at(int i, int j, int k) { return t_[(std::size_t(i) * n_ + j) * n_ + k]; }
  int n_;
  std::vector<signed char> t_;
};

std::vector<Point> pick(const PointSet& p, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  std::vector<Point> out;
  for (int i : idx) out.push_back(p[i]);
  return out;
}

}  // namespace

PointSet make_point_set(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  std::vector<Point> out;
  out.reserve(a.size() * b.size());
  for (const Point& p : a) {
    for (const Point& q : b) out.push_back(p + q);
  }
  return make_point_set(std::move(out));
}

const char* to_string(SubsetMethod m) { return m == SubsetMethod::DynamicProgramming ? "dp" : "brute_force"; }

std::optional<ConvexSubsetResult> dp_largest(const PointSet& points, Level mode) {
  check_mode(mode);
  const int n = static_cast<int>(points.size());
  if (n == 0) throw std::invalid_argument("empty point set");
  const bool weak = mode == Level::Weak;
  const OrientTable o(points);

  std::vector<int> best;
  // Small answers: any two points, or (weak) the largest collinear run.
  for (int i = 0; i < std::min(n, 2); ++i) best.push_back(i);
  if (weak) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> line;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j || o(i, j, k) == 0) line.push_back(k);
        }
        if (line.size() > best.size()) best = line;
      }
    }
  }

  auto dist2 = [&](int a, int p) {
    const Point d = points[p] - points[a];
    return d.x * d.x + d.y * d.y;
  };

  for (int a = 0; a < n; ++a) {
    const Point& pa = points[a];
    std::vector<int> up;
    for (int p = 0; p < n; ++p) {
      if (points[p].y > pa.y || (points[p].y == pa.y && points[p].x > pa.x)) up.push_back(p);
    }
    if (up.size() < 2) continue;
    // All of `up` lies in a half-open half-plane above a, so orientation
    // orders by angle; points on one ray sort by distance.
    std::sort(up.begin(), up.end(), [&](int p, int q) {
      const int s = o(a, p, q);
      if (s != 0) return s > 0;
      return dist2(a, p) < dist2(a, q);
    });
    const int k = static_cast<int>(up.size());
    // Points of `up` strictly between a and up[i].
    std::vector<int> tail(k, 0);
    for (int i = 1; i < k; ++i) {
      if (o(a, up[i - 1], up[i]) == 0) tail[i] = tail[i - 1] + 1;
    }

    // dp[i][j+1]: most points on a chain a, ..., up[j], up[i] (j = -1 is a).
    const int none = -1;
    std::vector<std::vector<int>> dp(k, std::vector<int>(k + 1, none));
    std::vector<std::vector<int>> parent(k, std::vector<int>(k + 1, -2));
    for (int i = 0; i < k; ++i) dp[i][0] = 2;

    int best_count = static_cast<int>(best.size());
    int best_i = -1, best_j = -1;
    for (int i = 0; i < k; ++i) {
      for (int j = -1; j < i; ++j) {
        const int cur = dp[i][j + 1];
        if (cur == none) continue;
        const int prev = j < 0 ? a : up[j];
        if (j >= 0 && o(prev, up[i], a) > 0) {
          const int total = cur + (weak ? tail[i] : 0);
          if (total > best_count) {
            best_count = total;
            best_i = i;
            best_j = j;
          }
        }
        for (int m = i + 1; m < k; ++m) {
          const int s = o(prev, up[i], up[m]);
          if (s < 0 || (s == 0 && !weak)) continue;
          if (cur + 1 > dp[m][i + 1]) {
            dp[m][i + 1] = cur + 1;
            parent[m][i + 1] = j;
          }
        }
      }
    }
    if (best_i < 0) continue;
    std::vector<int> chain{a};
    int i = best_i, j = best_j;
    while (true) {
      chain.push_back(up[i]);
      if (j < 0) break;
      const int pj = parent[i][j + 1];
      i = j;
      j = pj;
    }
    if (weak) {
      for (int t = best_i - tail[best_i]; t < best_i; ++t) chain.push_back(up[t]);
    }
    best = chain;
  }

  ConvexSubsetResult out;
  out.mode = mode;
  out.method = SubsetMethod::DynamicProgramming;
  out.witness = pick(points, best);
  out.size = static_cast<int>(out.witness.size());
  if (!convexity_status(out.witness).satisfies(mode)) return std::nullopt;
  return out;
}

ConvexSubsetResult brute_force_largest(const PointSet& points, Level mode) {
  check_mode(mode);
  const int n = static_cast<int>(points.size());
  if (n == 0) throw std::invalid_argument("empty point set");
  if (n > 20) throw std::invalid_argument("brute force is limited to 20 points");

  // Both convexity levels are hereditary, so infeasible prefixes are cut.
  std::vector<Point> current;
  std::vector<Point> best;
  std::function<void(int)> dfs = [&](int start) {
    if (current.size() > best.size()) best = current;
    if (current.size() + (n - start) <= best.size()) return;
    for (int i = start; i < n; ++i) {
      current.push_back(points[i]);
      if (convexity_status(current).satisfies(mode)) dfs(i + 1);
      current.pop_back();
    }
  };
  dfs(0);

  ConvexSubsetResult out;
  out.mode = mode;
  out.method = SubsetMethod::BruteForce;
  out.size = static_cast<int>(best.size());
  out.witness = std::move(best);
  return out;
}

ConvexSubsetResult largest_convex_subset(const PointSet& points, Level mode) {
  if (auto r = dp_largest(points, mode)) return *r;
  std::clog << "largest_convex_subset: dp witness failed verification on " << points.size()
            << " points, falling back to brute force\n";
  return brute_force_largest(points, mode);
}

GtildeReport gtilde_experiment(const PointSet& a) {
  if (a.empty() || convexity_status(a).level != Convexity::Strict) {
    throw std::invalid_argument("gtilde experiment needs a strictly convex point set");
  }
  GtildeReport r;
  r.n = static_cast<int>(a.size());
  const PointSet sum = minkowski_sum(a, a);
  r.sum_size = static_cast<int>(sum.size());
  r.weak_max = largest_convex_subset(sum, Level::Weak).size;
  r.strict_max = largest_convex_subset(sum, Level::Strict).size;
  r.bounds_ok = r.weak_max <= 2 * r.n && (r.n < 2 || r.strict_max <= 2 * r.n - 2);
  r.weak_attains = r.weak_max == 2 * r.n;
  r.strict_attains = r.strict_max >= (3 * r.n) / 2;
  return r;
}

}  // namespace midconvex
