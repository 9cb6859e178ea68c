#pragma once

#include <utility>
#include <vector>

#include "midconvex/drawing.hpp"

namespace midconvex {

/// Incident edges of one vertex, split by the clockwise order of the
/// neighbours along the boundary of the vertex hull, starting at the vertex:
/// the first and last neighbour give the exterior edges, the rest are
/// interior. Entries are edge indices.
struct EdgePartition {
  std::vector<int> exterior;
  std::vector<int> interior;
};

/// Throws std::invalid_argument if the vertex set is not weakly convex or v
/// is isolated.
EdgePartition edge_partition(const Drawing& d, int v);

/// Whether the segment from v to the midpoint of edge e avoids the open
/// interior of the midpoint hull.
bool sees(const Drawing& d, int v, int e);

struct SeeingProfile {
  int n0 = 0;  // vertices seeing none of their incident edges
  int n1 = 0;
  int n2 = 0;
  int n_over = 0;  // vertices seeing three or more incident edges
  int good_edges = 0;       // seen by both endpoints
  int doubly_exterior = 0;  // exterior at both endpoints
  /// Midpoint hull has empty interior; every vertex then sees every edge.
  bool degenerate = false;

  std::vector<int> unseen_edges;                 // seen by neither endpoint
  std::vector<std::pair<int, int>> seen_interior;  // (vertex, edge): interior edge seen
  std::vector<int> seen_incident;                // per vertex
  std::vector<EdgePartition> partitions;         // per vertex (empty when isolated)

  /// Preconditions of the accounting identity m = n1 + 2 n2 - good_edges.
  bool identity_applies() const { return !degenerate && unseen_edges.empty() && n_over == 0; }
  bool identity_holds(int m) const { return m == n1 + 2 * n2 - good_edges; }
};

/// Throws std::invalid_argument unless the vertex set is weakly convex.
SeeingProfile seeing_profile(const Drawing& d);

struct Augmentation {
  Level mode = Level::Weak;
  /// Largest number of vertices that can join the midpoint set.
  int count = 0;
  /// Lexicographically first maximum vertex subset.
  std::vector<int> vertices;
  /// False when the midpoints alone already miss the mode.
  bool midpoints_ok = true;
  /// The seeing check on the witness is only meaningful for drawings with
  /// strictly convex vertices, weakly convex midpoints and a full-dimensional
  /// midpoint hull.
  bool seeing_checked = false;
  /// Every edge vw with v in the witness is seen by w.
  bool seeing_holds = true;
};

/// Exhaustive search; throws std::invalid_argument for more than 20 vertices
/// or mode Arbitrary.
Augmentation augmentable_vertices(const Drawing& d, Level mode);

}  // namespace midconvex
