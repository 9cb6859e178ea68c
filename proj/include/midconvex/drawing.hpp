#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "midconvex/geometry.hpp"
#include "midconvex/graph.hpp"

namespace midconvex {

/// A straight-line drawing: a graph plus one point per vertex.
///
/// Only the structural invariant (one position per vertex) is enforced here;
/// the distinctness conditions that make a drawing valid are reported by
/// validate().
class Drawing {
 public:
  Drawing() = default;
  Drawing(Graph graph, std::vector<Point> positions);

  const Graph& graph() const { return graph_; }
  const std::vector<Point>& positions() const { return positions_; }
  const Point& position(int v) const { return positions_.at(v); }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }

  Point edge_midpoint(int e) const;

  int add_vertex(Point p);
  int add_edge(int u, int v) { return graph_.add_edge(u, v); }
  void move_vertex(int v, Point p) { positions_.at(v) = std::move(p); }

  friend bool operator==(const Drawing& a, const Drawing& b) {
    return a.positions_ == b.positions_ && a.graph_.vertex_count() == b.graph_.vertex_count() &&
           a.graph_.edges() == b.graph_.edges();
  }

 private:
  Graph graph_;
  std::vector<Point> positions_;
};

class InvalidDrawing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  enum class Kind { VertexVertex, MidpointMidpoint, VertexMidpoint };
  Kind kind;
  int first;   // vertex id, or edge index for MidpointMidpoint
  int second;  // vertex id for VertexVertex, otherwise an edge index
  Point where;

  std::string describe(const Graph& g) const;
};

/// Checks that vertices are pairwise distinct, midpoints are pairwise
/// distinct, and no midpoint coincides with a vertex.
std::optional<Violation> validate(const Drawing& d);

/// One midpoint per edge, in edge-list order.
std::vector<Point> midpoints(const Drawing& d);

struct ConvexityReport {
  ConvexityStatus vertices;
  ConvexityStatus midpoints;

  /// Whether this drawing witnesses membership of its graph in the class
  /// with the given vertex and midpoint levels.
  bool witnesses(Level vertex_level, Level midpoint_level) const {
    return vertices.satisfies(vertex_level) && midpoints.satisfies(midpoint_level);
  }
};

/// Throws InvalidDrawing if validate() reports a violation.
ConvexityReport classify(const Drawing& d);

/// Field of the coordinates: 0 if all rational, otherwise the shared D.
int drawing_root(const Drawing& d);

}  // namespace midconvex
