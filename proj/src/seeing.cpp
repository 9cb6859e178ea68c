#include "midconvex/seeing.hpp"

#include <algorithm>
#include <functional>

namespace midconvex {
namespace {

// Clockwise rank of every vertex along the vertex-hull boundary.
std::vector<int> boundary_rank(const Drawing& d) {
  if (!convexity_status(d.positions()).satisfies(Level::Weak)) {
    throw std::invalid_argument("vertex set is not weakly convex");
  }
  std::vector<int> order = boundary_order(d.positions());
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

EdgePartition partition_with(const Drawing& d, int v, const std::vector<int>& rank) {
  const auto& inc = d.graph().incident(v);
  if (inc.empty()) throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated");
  const int n = static_cast<int>(rank.size());
  std::vector<int> edges(inc.begin(), inc.end());
  // Counterclockwise ranks; clockwise distance from v is (rank v - rank w) mod n.
  auto cw = [&](int e) {
    int w = d.graph().edge(e).other(v);
    return ((rank[v] - rank[w]) % n + n) % n;
  };
  std::sort(edges.begin(), edges.end(), [&](int a, int b) { return cw(a) < cw(b); });
  EdgePartition out;
  if (edges.size() <= 2) {
    out.exterior = edges;
    return out;
  }
  out.exterior = {edges.front(), edges.back()};
  out.interior.assign(edges.begin() + 1, edges.end() - 1);
  return out;
}

bool sees_with(const Drawing& d, int v, int e, const std::vector<Point>& mid_hull) {
  return !segment_meets_open_region(d.position(v), d.edge_midpoint(e), mid_hull);
}

std::vector<Point> midpoint_hull(const Drawing& d) {
  const std::vector<Point> mids = midpoints(d);
  if (mids.empty()) return {};
  return convex_hull(mids);
}

}  // namespace

EdgePartition edge_partition(const Drawing& d, int v) { return partition_with(d, v, boundary_rank(d)); }

bool sees(const Drawing& d, int v, int e) { return sees_with(d, v, e, midpoint_hull(d)); }

SeeingProfile seeing_profile(const Drawing& d) {
  const std::vector<int> rank = boundary_rank(d);
  const std::vector<Point> hull = midpoint_hull(d);
  const Graph& g = d.graph();

  SeeingProfile prof;
  prof.degenerate = hull.size() < 3;
  prof.partitions.resize(g.vertex_count());
  prof.seen_incident.assign(g.vertex_count(), 0);

  std::vector<int> seen_by(g.edge_count(), 0);
  std::vector<int> exterior_at(g.edge_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      ++prof.n0;
      continue;
    }
    prof.partitions[v] = partition_with(d, v, rank);
    for (int e : prof.partitions[v].exterior) ++exterior_at[e];
    int count = 0;
    for (int e : g.incident(v)) {
      if (!sees_with(d, v, e, hull)) continue;
      ++count;
      ++seen_by[e];
      const auto& interior = prof.partitions[v].interior;
      if (std::find(interior.begin(), interior.end(), e) != interior.end()) prof.seen_interior.emplace_back(v, e);
    }
    prof.seen_incident[v] = count;
    if (count == 0) ++prof.n0;
    else if (count == 1) ++prof.n1;
    else if (count == 2) ++prof.n2;
    else ++prof.n_over;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (seen_by[e] == 0) prof.unseen_edges.push_back(e);
    if (seen_by[e] == 2) ++prof.good_edges;
    if (exterior_at[e] == 2) ++prof.doubly_exterior;
  }
  return prof;
}

Augmentation augmentable_vertices(const Drawing& d, Level mode) {
  if (mode == Level::Arbitrary) throw std::invalid_argument("augmentation mode must be strict or weak");
  const int n = d.vertex_count();
  if (n > 20) throw std::invalid_argument("augmentable_vertices: more than 20 vertices");

  Augmentation out;
  out.mode = mode;
  const std::vector<Point> mids = midpoints(d);
  if (!convexity_status(mids).satisfies(mode)) {
    out.midpoints_ok = false;
    return out;
  }

  auto feasible = [&](const std::vector<int>& subset) {
    std::vector<Point> pts = mids;
    for (int v : subset) pts.push_back(d.position(v));
    return convexity_status(pts).satisfies(mode);
  };

  std::vector<int> candidates;
  for (int v = 0; v < n; ++v) {
    if (feasible({v})) candidates.push_back(v);
  }

  // Both convexity levels are inherited by subsets, so infeasible branches
  // can be cut.
  std::vector<int> current;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (current.size() > out.vertices.size()) out.vertices = current;
    if (current.size() + (candidates.size() - start) <= out.vertices.size()) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      current.push_back(candidates[i]);
      if (feasible(current)) dfs(i + 1);
      current.pop_back();
    }
  };
  dfs(0);
  out.count = static_cast<int>(out.vertices.size());

  const ConvexityReport report = classify(d);
  const std::vector<Point> hull = mids.empty() ? std::vector<Point>{} : convex_hull(mids);
  out.seeing_checked = report.witnesses(Level::Strict, Level::Weak) && hull.size() >= 3;
  if (out.seeing_checked) {
    for (int v : out.vertices) {
      for (int e : d.graph().incident(v)) {
        int w = d.graph().edge(e).other(v);
        if (!sees_with(d, w, e, hull)) out.seeing_holds = false;
      }
    }
  }
  return out;
}

}  // namespace midconvex
