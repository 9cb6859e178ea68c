#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "midconvex/drawing.hpp"

namespace midconvex {

/// Required convexity levels for the vertex set and the midpoint set.
struct Target {
  Level vertices = Level::Strict;
  Level midpoints = Level::Strict;
};

/// Two letters from {s, w, a}: vertex level then midpoint level.
Target parse_target(const std::string& code);
std::string to_string(Target t);

struct SearchConfig {
  int restarts = 16;
  int iterations = 10000;
  double initial_step = 0.5;
  /// Step size and temperature are multiplied by this every iteration.
  double cooling = 0.999;
  double initial_temperature = 1e-2;
  /// Denominator bound for the first rationalization attempt.
  long denominator = 1024;
  std::uint64_t seed = 1;
};

using FloatPoint = std::array<double, 2>;

/// Scale-free violation measure of a float placement. Zero iff vertex and
/// midpoint sets meet the target with margin (strict points stand clear of
/// the hull of the others by 1e-4 of the diameter, weak points have no depth
/// inside the hull) and no two of the n + m points come closer than 1e-3 of
/// the diameter.
double violation_penalty(const std::vector<FloatPoint>& coords, const Graph& g, Target target);

/// Rationalizes the coordinates, snaps points that should lie on a common
/// hull edge onto one rational line (weak levels only), and certifies
/// exactly. Doubles the denominator bound on failure.
std::optional<Drawing> certify_coordinates(const std::vector<FloatPoint>& coords, const Graph& g, Target target,
                                           long denominator, int attempts = 12);

enum class SearchStatus { Certified, Failed };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Failed;
  std::optional<Drawing> drawing;  // set when Certified
  double best_penalty = 0;
  std::vector<FloatPoint> best_coordinates;
  int restarts_used = 0;
  /// Best penalty reached in each restart.
  std::vector<double> trace;
};

/// Annealing over float placements with exact certification. Deterministic
/// for a fixed config; restart r draws from its own stream seeded by
/// (seed, r). Failure is evidence only.
SearchOutcome find_drawing(const Graph& g, Target target, const SearchConfig& config);

/// K_4 - e on (1,0), (0,0), (0,1), (a,b) without the edge between the last
/// two. Needs a, b > 0 and a + b > 1; throws InvalidDrawing if two of the
/// points coincide.
Drawing k4e_family_drawing(const mpq_class& a, const mpq_class& b);
ConvexityReport k4e_family_check(const mpq_class& a, const mpq_class& b);

/// Replaces each listed edge by a path with `times` inner vertices. New
/// vertices are appended; untouched edges keep their order and the paths
/// come last.
Graph subdivide(const Graph& g, const std::vector<int>& edges, int times);

struct SubdivisionReport {
  bool found = false;
  int subdivisions = 0;      // total inserted vertices
  int per_edge = 0;          // inserted vertices per chosen edge
  std::vector<int> edges;    // chosen edges of the input graph
  std::optional<Drawing> drawing;
  int patterns_tried = 0;
};

/// For c = 0..max_subdivisions and every t dividing c, subdivides c/t edges
/// t times each (matchings first, at most `pattern_cap` edge sets per (c, t))
/// and runs find_drawing. Stops at the first certified hit.
SubdivisionReport subdivision_explore(const Graph& g, int max_subdivisions, Target target,
                                      const SearchConfig& config, int pattern_cap = 64);

}  // namespace midconvex
