#pragma once

#include <utility>
#include <vector>

namespace midconvex {

/// Undirected edge, always stored with first < second.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  int other(int w) const { return w == u ? v : u; }
  bool has(int w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edge order is preserved as
/// given; loops, repeated edges and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(i); }

  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }
  /// Indices of the edges incident to v, in edge-list order.
  const std::vector<int>& incident(int v) const { return incident_.at(v); }
  std::vector<int> neighbors(int v) const;
  bool has_edge(int u, int v) const;
  int min_degree() const;

  int add_vertex();
  int add_edge(int u, int v);

  /// Graph with `keep` (in the given order) as vertices 0..k-1 and every edge
  /// of this graph between kept vertices.
  Graph induced(const std::vector<int>& keep) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

/// Largest minimum degree over all subgraphs (repeated min-degree removal).
int degeneracy(const Graph& g);

/// Whether some vertex bijection maps the edge set of `a` onto that of `b`.
/// Brute force; intended for small graphs (n <= 9).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace midconvex
