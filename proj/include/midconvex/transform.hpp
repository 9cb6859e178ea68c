#pragma once

#include <stdexcept>

#include "midconvex/drawing.hpp"

namespace midconvex {

/// Raised when a perturbation procedure runs out of halving steps without an
/// exact certificate. The underlying geometry guarantees success, so this
/// signals a bug rather than a mathematical obstruction.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pushes every vertex that lies inside a hull edge outward along the
/// parabola eps*t*(1-t), halving eps from 1 until the result has strictly
/// convex vertices and midpoints.
///
/// Requires weakly (not strictly) convex vertices and strictly convex
/// midpoints.
Drawing strictify(const Drawing& d, int budget = 64);

/// Whether the edge meets the open interior of the vertex hull.
bool is_v_crossing(const Drawing& d, int edge);

/// Attaches a new leaf w to `attach` next to the non-V-crossing edge
/// {other, attach}. The new midpoint is placed just outside the edge, shifted
/// towards `attach`, so w lands next to `other` outside the vertex hull.
///
/// Requires strictly convex vertices and midpoints.
Drawing add_leaf(const Drawing& d, int other, int attach, int budget = 64);

}  // namespace midconvex
