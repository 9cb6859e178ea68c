#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "midconvex/drawing.hpp"
#include "midconvex/geometry.hpp"

namespace midconvex {

inline void PrintTo(const Point& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace midconvex

namespace midconvex::testing {

inline Point pt(long x, long y) { return {Scalar(x), Scalar(y)}; }
inline Point pt(int x, int y) { return pt(long{x}, long{y}); }
inline Point pt(const char* x, const char* y) { return {Scalar::parse(x), Scalar::parse(y)}; }

inline std::vector<Point> unit_square() { return {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}; }

inline Drawing square_c4() {
  return Drawing(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), unit_square());
}

inline Scalar random_rational(std::mt19937_64& rng, long range = 20, long den = 7) {
  std::uniform_int_distribution<long> num(-range * den, range * den);
  std::uniform_int_distribution<long> d(1, den);
  return Scalar(num(rng), d(rng));
}

/// x -> M x + t with rational entries and det(M) != 0 (sign chosen by caller
/// when `positive` is set).
struct Affine {
  Scalar a, b, c, d, tx, ty;

  Point operator()(const Point& p) const { return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty}; }
  Scalar det() const { return a * d - b * c; }
};

inline Affine random_affine(std::mt19937_64& rng, bool positive = false) {
  for (;;) {
    Affine f{random_rational(rng, 3, 5), random_rational(rng, 3, 5), random_rational(rng, 3, 5),
             random_rational(rng, 3, 5), random_rational(rng), random_rational(rng)};
    const int s = f.det().sign();
    if (s == 0 || (positive && s < 0)) continue;
    return f;
  }
}

inline Drawing apply(const Affine& f, const Drawing& d) {
  std::vector<Point> pts;
  for (const Point& p : d.positions()) pts.push_back(f(p));
  return Drawing(d.graph(), std::move(pts));
}

/// Random points on a small integer grid.
inline std::vector<Point> random_points(std::mt19937_64& rng, int n, long range) {
  std::uniform_int_distribution<long> c(0, range);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back(pt(c(rng), c(rng)));
  return out;
}

}  // namespace midconvex::testing

namespace midconvex::testing {

/// Drawings with weakly but not strictly convex vertices and strictly convex
/// midpoints: corners of a random convex polygon plus points inside its
/// sides, joined by a random sparse edge set. Rejection sampled.
inline std::vector<Drawing> weak_strict_instances(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Drawing> out;
  while (static_cast<int>(out.size()) < count) {
    std::uniform_int_distribution<int> corners_d(3, 5), extra_d(1, 2);
    const int corners = corners_d(rng);
    auto cloud = random_points(rng, 12, 12);
    std::vector<Point> hull = convex_hull(cloud);
    if (static_cast<int>(hull.size()) < corners) continue;
    hull.resize(corners);
    if (convexity_status(hull).level != Convexity::Strict) continue;
    std::vector<Point> pts = hull;
    const int extra = extra_d(rng);
    std::uniform_int_distribution<int> side(0, corners - 1);
    std::uniform_int_distribution<long> tnum(1, 6);
    for (int i = 0; i < extra; ++i) {
      const int s = side(rng);
      const Scalar t(tnum(rng), 7);
      const Point& a = hull[s];
      const Point& b = hull[(s + 1) % corners];
      pts.push_back(a + t * (b - a));
    }
    const int n = static_cast<int>(pts.size());
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<int> m_d(2, n);
    all.resize(m_d(rng));
    Drawing d(Graph(n, all), pts);
    if (validate(d)) continue;
    const auto r = classify(d);
    if (r.vertices.level == Convexity::WeakNotStrict && r.midpoints.level == Convexity::Strict) {
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace midconvex::testing
