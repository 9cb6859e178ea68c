#include "midconvex/transform.hpp"

#include <string>
#include <vector>

namespace midconvex {
namespace {

bool strict_strict(const Drawing& d) {
  if (validate(d)) return false;
  return classify(d).witnesses(Level::Strict, Level::Strict);
}

Scalar dot(const Point& p, const Point& q) { return p.x * q.x + p.y * q.y; }

}  // namespace

Drawing strictify(const Drawing& d, int budget) {
  const ConvexityReport report = classify(d);
  if (report.vertices.level != Convexity::WeakNotStrict || report.midpoints.level != Convexity::Strict) {
    throw std::invalid_argument("strictify needs weakly (not strictly) convex vertices and strictly convex midpoints");
  }
  const std::vector<Point> hull = convex_hull(d.positions());

  struct Shift {
    int vertex;
    Point bump;  // displacement for eps = 1
  };
  std::vector<Shift> shifts;
  const std::size_t hull_edges = hull.size() == 2 ? 1 : hull.size();
  std::vector<bool> assigned(d.vertex_count(), false);
  for (std::size_t i = 0; i < hull_edges; ++i) {
    const Point& x = hull[i];
    const Point& y = hull[(i + 1) % hull.size()];
    const Point dir = y - x;
    const Point outward{dir.y, -dir.x};
    const Scalar len2 = dot(dir, dir);
    for (int v = 0; v < d.vertex_count(); ++v) {
      const Point& z = d.position(v);
      if (assigned[v] || z == x || z == y || orient(x, y, z) != 0) continue;
      Scalar t = dot(z - x, dir) / len2;
      if (t.sign() <= 0 || t >= Scalar(1)) continue;
      assigned[v] = true;
      shifts.push_back({v, (t * (Scalar(1) - t)) * outward});
    }
  }

  Scalar eps(1);
  const Scalar half(1, 2);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Drawing out = d;
    for (const Shift& s : shifts) out.move_vertex(s.vertex, d.position(s.vertex) + eps * s.bump);
    if (strict_strict(out)) return out;
    eps *= half;
  }
  throw CertificationFailure("strictify: no certified eps within " + std::to_string(budget) + " halvings");
}

bool is_v_crossing(const Drawing& d, int edge) {
  const Edge& e = d.graph().edge(edge);
  const std::vector<Point> hull = convex_hull(d.positions());
  return segment_meets_open_region(d.position(e.u), d.position(e.v), hull);
}

Drawing add_leaf(const Drawing& d, int other, int attach, int budget) {
  const ConvexityReport report = classify(d);
  if (!report.witnesses(Level::Strict, Level::Strict)) {
    throw std::invalid_argument("add_leaf needs strictly convex vertices and midpoints");
  }
  if (!d.graph().has_edge(other, attach)) {
    throw std::invalid_argument("add_leaf: " + std::to_string(other) + "-" + std::to_string(attach) + " is not an edge");
  }
  const std::vector<Point> hull = convex_hull(d.positions());
  const Point& u = d.position(other);
  const Point& v = d.position(attach);
  if (segment_meets_open_region(u, v, hull)) throw std::invalid_argument("add_leaf: edge is V-crossing");

  const Point along = v - u;
  Point outward{-along.y, along.x};
  for (const Point& p : d.positions()) {
    if (orient(u, v, p) > 0) {
      outward = Scalar(-1) * outward;
      break;
    }
  }

  // New leaf w = u + s * ((v - u) + c * outward): its midpoint with v sits
  // just beyond the edge uv, slightly towards v.
  Scalar step(1, 2);
  const Scalar half(1, 2);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Drawing out = d;
    Point w = u + step * (along + step * outward);
    int id = out.add_vertex(std::move(w));
    out.add_edge(attach, id);
    if (strict_strict(out)) return out;
    step *= half;
  }
  throw CertificationFailure("add_leaf: no certified placement within " + std::to_string(budget) + " halvings");
}

}  // namespace midconvex
