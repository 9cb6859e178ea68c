#pragma once

#include <string>

#include "midconvex/drawing.hpp"

namespace midconvex {

/// SVG 1.1 document: the drawing fitted into a 1000x1000 view box with a 5%
/// margin. Outlines of the vertex hull (class hull-v) and midpoint hull
/// (class hull-e) come first, then one <line> per edge, a hollow circle per
/// midpoint and a filled circle per vertex.
std::string render_svg(const Drawing& d);

}  // namespace midconvex
