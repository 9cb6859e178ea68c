#pragma once

#include <array>
#include <vector>

#include "midconvex/drawing.hpp"

namespace midconvex {

struct ConstructionParams {
  /// eps_0, eps_1, ... for L_n; empty means eps_i = 2^i. Must be positive and
  /// strictly increasing, with at least as many entries as the construction
  /// uses.
  std::vector<mpq_class> epsilon;
  /// Denominator bound for the tangent half-angle parameters of circle points.
  long circle_denominator = 1000;
  /// Halving steps or polygon refinements before giving up.
  int retry_budget = 60;
};

/// Near-regular convex n-gon with rational vertices on the unit circle,
/// counterclockwise from (1, 0).
std::vector<Point> near_regular_polygon(int n, long max_denominator);

Drawing cycle_drawing(int n, const ConstructionParams& params = {});

/// K_n on (0,0) and (1, 2^i), i = 1..n-1.
Drawing complete_weak_drawing(int n);

/// K_4 - e with vertices (1,0), (0,0), (0,1), (2,1); the missing edge is 2-3.
Drawing k4_minus_e_drawing();

/// K_{2,3}: x_1..x_3 are vertices 0..2, y_1, y_2 are 3 and 4.
Drawing k23_drawing();

/// Two paths u_1..u_a and v_1..v_b (a = floor(n/2), b = ceil(n/2)) with u_1v_1
/// and the zigzag u_i v_{i-1}, u_{j-1} v_j. Vertex u_i is 2(i-1), v_i is
/// 2(i-1)+1, and for odd n the last v is n-1.
Graph ln_graph(int n);
Drawing ln_drawing(int n, const ConstructionParams& params = {});

/// Triangle uvw (0, 1, 2) with (n-3)/2 four-cycles u p^l_i p^r_{h+1-i} v glued
/// along uv. p^l_i is 2+i and p^r_i is 2+h+i, with h = (n-3)/2.
Graph bn_graph(int n);
Drawing bn_drawing(int n, const ConstructionParams& params = {});

/// 2k-cycle v_1..v_2k (vertices 0..2k-1) plus u_i (vertex 2k+i-1) joined to
/// v_{2i} and v_{2i+3}, indices mod 2k.
Graph hk_graph(int k);
Drawing hk_drawing(int k, const ConstructionParams& params = {});

/// Prism over C_k: v_0..v_{2k-1}, outer edges v_i v_{i+1} for even i, inner
/// edges v_i v_{i+2}.
Graph pk_graph(int k);
/// Exact drawing for k in {3, 4, 6}; throws std::invalid_argument otherwise.
Drawing pk_drawing(int k);

struct FloatPrism {
  std::vector<std::array<double, 2>> positions;
  /// Largest distance of any midpoint from the boundary of the polygon
  /// spanned by the outer-edge midpoints.
  double max_deviation = 0;
};
/// Regular 2k-gon version of pk_drawing evaluated in doubles.
FloatPrism pk_float_check(int k);

/// Removes the degree-2 vertex v and joins its neighbours; vertices above v
/// shift down by one and the new edge goes last. Positions are kept; the
/// result is not classified.
Drawing suppress_degree2(const Drawing& d, int v);

/// Branch vertices and connecting paths of a K_{3,3} subdivision. Path
/// 3*i + j runs from side_a[i] to side_b[j], endpoints included.
struct K33Witness {
  std::array<int, 3> side_a;
  std::array<int, 3> side_b;
  std::array<std::vector<int>, 9> paths;
};
K33Witness h3_k33_witness();
/// Paths follow graph edges, are internally disjoint and avoid branch
/// vertices in their interiors.
bool check_k33_witness(const Graph& g, const K33Witness& w);

}  // namespace midconvex
