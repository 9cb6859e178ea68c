#include "midconvex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace midconvex {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), incident_(n < 0 ? 0 : n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int e : incident_.at(v)) out.push_back(edges_[e].other(v));
  return out;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& inc = incident_[u].size() <= incident_[v].size() ? incident_[u] : incident_[v];
  Edge target(u, v);
  return std::any_of(inc.begin(), inc.end(), [&](int e) { return edges_[e] == target; });
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::add_vertex() {
  incident_.emplace_back();
  return n_++;
}

int Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw std::invalid_argument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  edges_.emplace_back(u, v);
  int idx = static_cast<int>(edges_.size()) - 1;
  incident_[u].push_back(idx);
  incident_[v].push_back(idx);
  return idx;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> new_id(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id.at(keep[i]) = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (const Edge& e : edges_) {
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) out.add_edge(new_id[e.u], new_id[e.v]);
  }
  return out;
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int result = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    }
    result = std::max(result, deg[pick]);
    removed[pick] = true;
    for (int w : g.neighbors(pick)) {
      if (!removed[w]) --deg[w];
    }
  }
  return result;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = da[v] == db[perm[v]];
    for (const Edge& e : a.edges()) {
      if (!ok) break;
      ok = b.has_edge(perm[e.u], perm[e.v]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace midconvex
