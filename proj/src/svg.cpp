#include "midconvex/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <vector>

namespace midconvex {
namespace {

constexpr double kSize = 1000;
constexpr double kMargin = 0.05 * kSize;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Frame {
  double min_x = 0, min_y = 0, scale = 1, off_x = 0, off_y = 0;

  std::array<double, 2> map(const Point& p) const {
    return {off_x + (p.x.to_double() - min_x) * scale, kSize - (off_y + (p.y.to_double() - min_y) * scale)};
  }
};

Frame fit(const std::vector<Point>& pts) {
  Frame f;
  if (pts.empty()) return f;
  double max_x = pts[0].x.to_double(), max_y = pts[0].y.to_double();
  f.min_x = max_x;
  f.min_y = max_y;
  for (const Point& p : pts) {
    f.min_x = std::min(f.min_x, p.x.to_double());
    f.min_y = std::min(f.min_y, p.y.to_double());
    max_x = std::max(max_x, p.x.to_double());
    max_y = std::max(max_y, p.y.to_double());
  }
  const double w = max_x - f.min_x, h = max_y - f.min_y;
  const double span = std::max(w, h);
  const double inner = kSize - 2 * kMargin;
  f.scale = span > 0 ? inner / span : 1;
  f.off_x = kMargin + (inner - w * f.scale) / 2;
  f.off_y = kMargin + (inner - h * f.scale) / 2;
  return f;
}

std::string outline(const std::vector<Point>& pts, const Frame& f, const char* cls) {
  if (pts.empty()) return {};
  const std::vector<Point> hull = convex_hull(pts);
  std::string coords;
  for (const Point& p : hull) {
    const auto q = f.map(p);
    if (!coords.empty()) coords += ' ';
    coords += num(q[0]) + "," + num(q[1]);
  }
  const char* tag = hull.size() >= 3 ? "polygon" : "polyline";
  return std::string("  <") + tag + " class=\"" + cls + "\" points=\"" + coords + "\"/>\n";
}

}  // namespace

std::string render_svg(const Drawing& d) {
  const std::vector<Point> mids = midpoints(d);
  const Frame f = fit(d.positions());

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  out += "  <style>.hull-v{fill:none;stroke:#4477aa;stroke-dasharray:8 4}"
         ".hull-e{fill:none;stroke:#cc6677;stroke-dasharray:4 4}"
         ".edge{stroke:#333333;stroke-width:1.5}"
         ".midpoint{fill:#ffffff;stroke:#cc6677;stroke-width:1.5}"
         ".vertex{fill:#000000}</style>\n";
  out += outline(d.positions(), f, "hull-v");
  out += outline(mids, f, "hull-e");
  for (const Edge& e : d.graph().edges()) {
    const auto a = f.map(d.position(e.u));
    const auto b = f.map(d.position(e.v));
    out += "  <line class=\"edge\" x1=\"" + num(a[0]) + "\" y1=\"" + num(a[1]) + "\" x2=\"" + num(b[0]) + "\" y2=\"" +
           num(b[1]) + "\"/>\n";
  }
  for (const Point& m : mids) {
    const auto q = f.map(m);
    out += "  <circle class=\"midpoint\" cx=\"" + num(q[0]) + "\" cy=\"" + num(q[1]) + "\" r=\"4\"/>\n";
  }
  for (const Point& p : d.positions()) {
    const auto q = f.map(p);
    out += "  <circle class=\"vertex\" cx=\"" + num(q[0]) + "\" cy=\"" + num(q[1]) + "\" r=\"5\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace midconvex
