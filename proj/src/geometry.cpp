#include "midconvex/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace midconvex {

bool lex_less(const Point& p, const Point& q) {
  auto c = p.x <=> q.x;
  if (c != 0) return c < 0;
  return p.y < q.y;
}

Point midpoint(const Point& p, const Point& q) {
  static const Scalar half(1, 2);
  return {half * (p.x + q.x), half * (p.y + q.y)};
}

Scalar cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int orient(const Point& p, const Point& q, const Point& r) { return cross(p, q, r).sign(); }

std::vector<Point> convex_hull(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Point> hull;
  hull.reserve(2 * pts.size());
  for (const Point& p : pts) {
    while (hull.size() >= 2 && orient(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size();
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() > lower && orient(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  return hull;
}

bool satisfies(Convexity status, Level required) {
  switch (required) {
    case Level::Strict: return status == Convexity::Strict;
    case Level::Weak: return status != Convexity::NonConvex;
    case Level::Arbitrary: return true;
  }
  return false;
}

bool ConvexityStatus::satisfies(Level required) const { return midconvex::satisfies(level, required); }

const char* to_string(Convexity c) {
  switch (c) {
    case Convexity::Strict: return "strict";
    case Convexity::WeakNotStrict: return "weak";
    case Convexity::NonConvex: return "non-convex";
  }
  return "?";
}

const char* to_string(Level l) {
  switch (l) {
    case Level::Strict: return "s";
    case Level::Weak: return "w";
    case Level::Arbitrary: return "a";
  }
  return "?";
}

namespace {

// point_vs_hull without the convexity check on `hull`.
Location locate(const Point& p, std::span<const Point> hull) {
  if (hull.size() == 1) return p == hull[0] ? Location::Boundary : Location::Outside;
  if (hull.size() == 2) {
    if (orient(hull[0], hull[1], p) != 0) return Location::Outside;
    const Point d = hull[1] - hull[0];
    Scalar t = (p.x - hull[0].x) * d.x + (p.y - hull[0].y) * d.y;
    Scalar len = d.x * d.x + d.y * d.y;
    return (t.sign() >= 0 && t <= len) ? Location::Boundary : Location::Outside;
  }
  bool on_edge = false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    int o = orient(hull[i], hull[(i + 1) % hull.size()], p);
    if (o < 0) return Location::Outside;
    if (o == 0) on_edge = true;
  }
  return on_edge ? Location::Boundary : Location::Interior;
}

}  // namespace

ConvexityStatus convexity_status(std::span<const Point> points) {
  if (points.empty()) return {};
  std::vector<Point> distinct(points.begin(), points.end());
  std::sort(distinct.begin(), distinct.end(), lex_less);
  std::optional<Point> repeated;
  for (std::size_t i = 1; i < distinct.size(); ++i) {
    if (distinct[i] == distinct[i - 1]) {
      repeated = distinct[i];
      break;
    }
  }
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::vector<Point> hull = convex_hull(distinct);

  if (hull.size() >= 3) {
    for (const Point& p : points) {
      if (locate(p, hull) == Location::Interior) return {Convexity::NonConvex, p};
    }
  }
  if (hull.size() == distinct.size() && !repeated) return {Convexity::Strict, std::nullopt};
  for (const Point& p : points) {
    if (std::find(hull.begin(), hull.end(), p) == hull.end()) return {Convexity::WeakNotStrict, p};
  }
  return {Convexity::WeakNotStrict, repeated};
}

Location point_vs_hull(const Point& p, std::span<const Point> hull) {
  if (hull.empty()) throw std::invalid_argument("point_vs_hull: empty hull");
  if (hull.size() == 2 && hull[0] == hull[1]) throw std::invalid_argument("point_vs_hull: repeated corner");
  if (hull.size() >= 3) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (orient(hull[i], hull[(i + 1) % hull.size()], hull[(i + 2) % hull.size()]) <= 0) {
        throw std::invalid_argument("point_vs_hull: hull is not a strictly convex ccw polygon");
      }
    }
  }
  return locate(p, hull);
}

bool segment_meets_open_region(const Point& a, const Point& b, std::span<const Point> hull) {
  if (hull.size() < 3) return false;
  // Parametrize a + t(b - a), t in [0, 1]; each hull edge gives an open
  // constraint alpha + beta t > 0.
  Scalar lo(0), hi(1);
  bool lo_open = false, hi_open = false;
  const Point dir = b - a;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& c = hull[i];
    const Point& d = hull[(i + 1) % hull.size()];
    Scalar alpha = cross(c, d, a);
    Scalar beta = (d.x - c.x) * dir.y - (d.y - c.y) * dir.x;
    int sb = beta.sign();
    if (sb == 0) {
      if (alpha.sign() <= 0) return false;
      continue;
    }
    Scalar t = -alpha / beta;
    if (sb > 0) {
      if (t > lo || (t == lo && !lo_open)) {
        lo = t;
        lo_open = true;
      }
    } else {
      if (t < hi || (t == hi && !hi_open)) {
        hi = t;
        hi_open = true;
      }
    }
  }
  if (lo < hi) return true;
  return lo == hi && !lo_open && !hi_open;
}

std::vector<int> boundary_order(std::span<const Point> points) {
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  if (points.size() <= 1) return order;
  const std::vector<Point> hull = convex_hull(points);
  if (hull.size() <= 2) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return lex_less(points[i], points[j]); });
    return order;
  }
  struct Key {
    std::size_t edge;
    Scalar along;
  };
  std::vector<Key> keys;
  keys.reserve(points.size());
  for (const Point& p : points) {
    bool placed = false;
    for (std::size_t i = 0; i < hull.size() && !placed; ++i) {
      const Point& c = hull[i];
      const Point& d = hull[(i + 1) % hull.size()];
      if (p == c) {
        keys.push_back({i, Scalar(0)});
        placed = true;
      } else if (orient(c, d, p) == 0) {
        keys.push_back({i, (p.x - c.x) * (d.x - c.x) + (p.y - c.y) * (d.y - c.y)});
        placed = true;
      }
    }
    if (!placed) throw std::invalid_argument("boundary_order: point is not on the hull boundary");
  }
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    if (keys[i].edge != keys[j].edge) return keys[i].edge < keys[j].edge;
    return keys[i].along < keys[j].along;
  });
  return order;
}

}  // namespace midconvex
