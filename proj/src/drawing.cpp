#include "midconvex/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace midconvex {

Drawing::Drawing(Graph graph, std::vector<Point> positions)
    : graph_(std::move(graph)), positions_(std::move(positions)) {
  if (static_cast<int>(positions_.size()) != graph_.vertex_count()) {
    throw std::invalid_argument("drawing needs exactly one position per vertex");
  }
  int root = 0;
  for (const Point& p : positions_) {
    root = common_root(root, p.x.root());
    root = common_root(root, p.y.root());
  }
}

Point Drawing::edge_midpoint(int e) const {
  const Edge& ed = graph_.edge(e);
  return midpoint(positions_[ed.u], positions_[ed.v]);
}

int Drawing::add_vertex(Point p) {
  positions_.push_back(std::move(p));
  return graph_.add_vertex();
}

std::string Violation::describe(const Graph& g) const {
  auto edge_name = [&](int e) {
    const Edge& ed = g.edge(e);
    return "edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v);
  };
  switch (kind) {
    case Kind::VertexVertex:
      return "vertices " + std::to_string(first) + " and " + std::to_string(second) + " coincide at " +
             where.to_string();
    case Kind::MidpointMidpoint:
      return "midpoints of " + edge_name(first) + " and " + edge_name(second) + " coincide at " +
             where.to_string();
    case Kind::VertexMidpoint:
      return "vertex " + std::to_string(first) + " coincides with the midpoint of " + edge_name(second) +
             " at " + where.to_string();
  }
  return "violation";
}

std::vector<Point> midpoints(const Drawing& d) {
  std::vector<Point> out;
  out.reserve(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) out.push_back(d.edge_midpoint(e));
  return out;
}

std::optional<Violation> validate(const Drawing& d) {
  // Tag every point with (is_midpoint, index), sort, compare neighbours.
  struct Tagged {
    Point p;
    bool mid;
    int index;
  };
  std::vector<Tagged> all;
  all.reserve(d.vertex_count() + d.edge_count());
  for (int v = 0; v < d.vertex_count(); ++v) all.push_back({d.position(v), false, v});
  for (int e = 0; e < d.edge_count(); ++e) all.push_back({d.edge_midpoint(e), true, e});
  std::stable_sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
    if (lex_less(a.p, b.p)) return true;
    if (lex_less(b.p, a.p)) return false;
    return a.mid < b.mid;
  });

  std::optional<Violation> found;
  auto better = [](const Violation& a, const Violation& b) {
    return std::tie(a.kind, a.first, a.second) < std::tie(b.kind, b.first, b.second);
  };
  for (std::size_t i = 1; i < all.size(); ++i) {
    const Tagged& a = all[i - 1];
    const Tagged& b = all[i];
    if (!(a.p == b.p)) continue;
    Violation v{};
    if (!a.mid && !b.mid) {
      v = {Violation::Kind::VertexVertex, std::min(a.index, b.index), std::max(a.index, b.index), a.p};
    } else if (a.mid && b.mid) {
      v = {Violation::Kind::MidpointMidpoint, std::min(a.index, b.index), std::max(a.index, b.index), a.p};
    } else {
      const Tagged& vert = a.mid ? b : a;
      const Tagged& mid = a.mid ? a : b;
      v = {Violation::Kind::VertexMidpoint, vert.index, mid.index, a.p};
    }
    if (!found || better(v, *found)) found = v;
  }
  return found;
}

ConvexityReport classify(const Drawing& d) {
  if (auto v = validate(d)) throw InvalidDrawing("invalid drawing: " + v->describe(d.graph()));
  ConvexityReport report;
  report.vertices = convexity_status(d.positions());
  const std::vector<Point> mids = midpoints(d);
  report.midpoints = convexity_status(mids);
  return report;
}

int drawing_root(const Drawing& d) {
  int root = 0;
  for (const Point& p : d.positions()) {
    root = common_root(root, p.x.root());
    root = common_root(root, p.y.root());
  }
  return root;
}

}  // namespace midconvex
