#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "midconvex/scalar.hpp"

namespace midconvex {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }

  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

/// Lexicographic order on (x, y).
bool lex_less(const Point& p, const Point& q);

Point midpoint(const Point& p, const Point& q);

/// Cross product of (q - p) and (r - p).
Scalar cross(const Point& p, const Point& q, const Point& r);

/// +1 counterclockwise, 0 collinear, -1 clockwise. Throws FieldMismatch when
/// the points live in different quadratic fields.
int orient(const Point& p, const Point& q, const Point& r);

/// Corners of the convex hull in counterclockwise order, starting from the
/// lexicographically smallest point. Collinear input yields its two extremes,
/// a single distinct point yields itself. Throws std::invalid_argument on
/// empty input.
std::vector<Point> convex_hull(std::span<const Point> points);

enum class Convexity { Strict, WeakNotStrict, NonConvex };

/// Required level of a point set: strictly convex, weakly convex, or anything.
enum class Level { Strict, Weak, Arbitrary };

struct ConvexityStatus {
  Convexity level = Convexity::Strict;
  /// A point violating the next stronger status (interior point for
  /// NonConvex, a non-corner boundary point for WeakNotStrict).
  std::optional<Point> witness;

  bool satisfies(Level required) const;
};

bool satisfies(Convexity status, Level required);
const char* to_string(Convexity c);
const char* to_string(Level l);

/// Strict iff every distinct point is a hull corner and nothing repeats;
/// WeakNotStrict iff every point lies on the hull boundary; NonConvex
/// otherwise.
ConvexityStatus convexity_status(std::span<const Point> points);

enum class Location { Outside, Boundary, Interior };

/// Location of p relative to a counterclockwise convex polygon given by its
/// corners (a segment or a single point are accepted). Throws
/// std::invalid_argument if `hull` is not strictly convex and ccw.
Location point_vs_hull(const Point& p, std::span<const Point> hull);

/// Whether the closed segment ab meets the open interior of the convex ccw
/// polygon `hull`. Degenerate hulls have empty interior.
bool segment_meets_open_region(const Point& a, const Point& b, std::span<const Point> hull);

/// Points of a weakly convex set in counterclockwise boundary order, starting
/// at the first hull corner. For collinear sets the order runs along the line.
/// Returns the permutation of input indices. Precondition: no interior points,
/// no duplicates.
std::vector<int> boundary_order(std::span<const Point> points);

}  // namespace midconvex
