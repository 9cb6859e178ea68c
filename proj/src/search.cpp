#include "midconvex/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace midconvex {
namespace {

constexpr double kStrictMargin = 1e-4;
constexpr double kCoincidenceMargin = 1e-3;
// Placements below this penalty are handed to the exact pipeline.
constexpr double kCertifyBelow = 1e-5;
// Relative distance under which a point is snapped onto a hull edge.
constexpr double kSnapTolerance = 1e-4;
constexpr double kParallelTolerance = 1e-3;
constexpr int kCertifyEvery = 250;

// ------------------------------------------------------------ float geometry

double cross(const FloatPoint& a, const FloatPoint& b, const FloatPoint& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

double dist(const FloatPoint& a, const FloatPoint& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

double segment_distance(const FloatPoint& p, const FloatPoint& a, const FloatPoint& b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0) return dist(p, a);
  const double t = std::clamp(((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2, 0.0, 1.0);
  return std::hypot(p[0] - a[0] - t * dx, p[1] - a[1] - t * dy);
}

// Indices of hull corners, counterclockwise.
std::vector<int> float_hull(const std::vector<FloatPoint>& pts) {
  std::vector<int> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] == pts[b]; }), idx.end());
  if (idx.size() < 3) return idx;
  std::vector<int> h(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && cross(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
    const int i = idx[j];
    while (k >= lower && cross(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

// Positive outside (distance to the hull), negative inside (minus the depth).
double signed_distance(const FloatPoint& p, const std::vector<FloatPoint>& pts, const std::vector<int>& hull) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return dist(p, pts[hull[0]]);
  if (hull.size() == 2) return segment_distance(p, pts[hull[0]], pts[hull[1]]);
  bool inside = true;
  double depth = std::numeric_limits<double>::infinity();
  double outside = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const FloatPoint& a = pts[hull[i]];
    const FloatPoint& b = pts[hull[(i + 1) % hull.size()]];
    const double len = dist(a, b);
    const double c = cross(a, b, p) / len;
    if (c < 0) inside = false;
    depth = std::min(depth, c);
    outside = std::min(outside, segment_distance(p, a, b));
  }
  return inside ? -depth : outside;
}

std::vector<FloatPoint> float_midpoints(const std::vector<FloatPoint>& coords, const Graph& g) {
  std::vector<FloatPoint> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    out.push_back({(coords[e.u][0] + coords[e.v][0]) / 2, (coords[e.u][1] + coords[e.v][1]) / 2});
  }
  return out;
}

double set_penalty(const std::vector<FloatPoint>& s, Level level, double diameter) {
  if (level == Level::Arbitrary || s.size() < 2) return 0;
  double total = 0;
  if (level == Level::Strict) {
    std::vector<FloatPoint> others;
    for (std::size_t i = 0; i < s.size(); ++i) {
      others.assign(s.begin(), s.end());
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      const double d = signed_distance(s[i], others, float_hull(others));
      total += std::max(0.0, kStrictMargin * diameter - d);
    }
  } else {
    const std::vector<int> hull = float_hull(s);
    for (const FloatPoint& p : s) total += std::max(0.0, -signed_distance(p, s, hull));
  }
  return total / diameter;
}

// ------------------------------------------------------------ exact snapping

struct Row {
  std::vector<std::pair<int, mpq_class>> terms;  // variable 2v is x_v, 2v+1 is y_v
  mpq_class rhs;
};

// Solves M y = s by Gauss-Jordan elimination; free unknowns are zero.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> s) {
  const std::size_t n = s.size();
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    std::swap(s[p], s[row]);
    const mpq_class inv = 1 / m[row][col];
    for (std::size_t c = col; c < n; ++c) m[row][c] *= inv;
    s[row] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[row][c];
      s[r] -= f * s[row];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::size_t r = row; r < n; ++r) {
    if (s[r] != 0) return std::nullopt;
  }
  std::vector<mpq_class> y(n, 0);
  for (std::size_t r = 0; r < row; ++r) y[pivot_col[r]] = s[r];
  return y;
}

// Moves the vertices as little as possible (least squares) so that every
// group of points near a common hull edge lies on one rational line.
std::optional<std::vector<mpq_class>> snap(std::vector<mpq_class> z, const Graph& g, Target target) {
  const int n = g.vertex_count();
  std::vector<Row> rows;
  std::vector<std::pair<FloatPoint, std::pair<mpq_class, mpq_class>>> normals;

  auto add_role = [&](bool midpoint_role) {
    // Each point is a weighted sum of vertex positions.
    std::vector<std::vector<std::pair<int, mpq_class>>> weights;
    if (midpoint_role) {
      for (const Edge& e : g.edges()) weights.push_back({{e.u, mpq_class(1, 2)}, {e.v, mpq_class(1, 2)}});
    } else {
      for (int v = 0; v < n; ++v) weights.push_back({{v, mpq_class(1)}});
    }
    auto exact = [&](int p, int axis) {
      mpq_class acc = 0;
      for (const auto& [v, w] : weights[p]) acc += w * z[2 * v + axis];
      return acc;
    };
    std::vector<FloatPoint> pts;
    for (std::size_t p = 0; p < weights.size(); ++p) {
      pts.push_back({exact(static_cast<int>(p), 0).get_d(), exact(static_cast<int>(p), 1).get_d()});
    }
    const std::vector<int> hull = float_hull(pts);
    if (hull.size() < 2) return;
    double diameter = 0;
    for (const auto& a : pts) {
      for (const auto& b : pts) diameter = std::max(diameter, dist(a, b));
    }
    const std::size_t sides = hull.size() == 2 ? 1 : hull.size();
    // Groups already placed on a line; consecutive hull edges that are almost
    // collinear end up in one group.
    std::vector<std::vector<int>> member_of(pts.size());
    int groups = 0;
    for (std::size_t i = 0; i < sides; ++i) {
      const int a = hull[i];
      const int b = hull[(i + 1) % hull.size()];
      bool shared = false;
      for (int ga : member_of[a]) {
        for (int gb : member_of[b]) shared = shared || ga == gb;
      }
      if (shared) continue;
      const double len = dist(pts[a], pts[b]);
      // Everything within the tolerance band of the supporting line through
      // a and b; such points can only sit on or just inside the boundary.
      std::vector<int> group;
      for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
        if (p == a || p == b || std::abs(cross(pts[a], pts[b], pts[p])) / len <= kSnapTolerance * diameter) {
          group.push_back(p);
        }
      }
      if (group.size() < 3) continue;
      for (int p : group) member_of[p].push_back(groups);
      ++groups;
      // Line direction from the two group points farthest apart.
      int fa = a, fb = b;
      double far = len;
      for (int p : group) {
        for (int q : group) {
          if (dist(pts[p], pts[q]) > far) {
            far = dist(pts[p], pts[q]);
            fa = p;
            fb = q;
          }
        }
      }
      const FloatPoint unit{-(pts[fb][1] - pts[fa][1]) / far, (pts[fb][0] - pts[fa][0]) / far};
      // Nearly parallel lines share one rational normal: incidence patterns
      // such as two parallel midpoint lines only survive with exact parallels.
      mpq_class nx = rationalize(unit[0], 1L << 16);
      mpq_class ny = rationalize(unit[1], 1L << 16);
      for (const auto& [f, q] : normals) {
        if (std::abs(f[0] * unit[1] - f[1] * unit[0]) < kParallelTolerance) {
          const int sgn = f[0] * unit[0] + f[1] * unit[1] < 0 ? -1 : 1;
          nx = sgn * q.first;
          ny = sgn * q.second;
          break;
        }
      }
      if (nx == 0 && ny == 0) continue;
      normals.push_back({unit, {nx, ny}});
      mpq_class c = 0;
      for (int p : group) c += nx * exact(p, 0) + ny * exact(p, 1);
      c /= static_cast<long>(group.size());
      for (int p : group) {
        Row r;
        for (const auto& [v, w] : weights[p]) {
          if (nx != 0) r.terms.emplace_back(2 * v, w * nx);
          if (ny != 0) r.terms.emplace_back(2 * v + 1, w * ny);
        }
        r.rhs = c;
        rows.push_back(std::move(r));
      }
    }
  };
  if (target.vertices == Level::Weak) add_role(false);
  if (target.midpoints == Level::Weak) add_role(true);
  if (rows.empty()) return z;

  const std::size_t k = rows.size();
  std::vector<std::vector<mpq_class>> dense(k, std::vector<mpq_class>(z.size(), 0));
  std::vector<mpq_class> residual(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (const auto& [var, coef] : rows[r].terms) dense[r][var] += coef;
    mpq_class az = 0;
    for (std::size_t c = 0; c < z.size(); ++c) az += dense[r][c] * z[c];
    residual[r] = rows[r].rhs - az;
  }
  std::vector<std::vector<mpq_class>> gram(k, std::vector<mpq_class>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      mpq_class acc = 0;
      for (std::size_t c = 0; c < z.size(); ++c) {
        if (dense[i][c] != 0 && dense[j][c] != 0) acc += dense[i][c] * dense[j][c];
      }
      gram[i][j] = acc;
      gram[j][i] = acc;
    }
  }
  auto y = solve(std::move(gram), std::move(residual));
  if (!y) return std::nullopt;
  for (std::size_t r = 0; r < k; ++r) {
    if ((*y)[r] == 0) continue;
    for (std::size_t c = 0; c < z.size(); ++c) {
      if (dense[r][c] != 0) z[c] += dense[r][c] * (*y)[r];
    }
  }
  return z;
}

std::optional<Drawing> certify_exact(const std::vector<mpq_class>& z, const Graph& g, Target target) {
  std::vector<Point> pos;
  for (int v = 0; v < g.vertex_count(); ++v) pos.push_back({Scalar(z[2 * v]), Scalar(z[2 * v + 1])});
  Drawing d(g, std::move(pos));
  if (validate(d)) return std::nullopt;
  if (!classify(d).witnesses(target.vertices, target.midpoints)) return std::nullopt;
  return d;
}

// ------------------------------------------------------------ annealing

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<FloatPoint> initial_placement(int n, int restart, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<FloatPoint> x(n);
  if (restart % 2 == 0) {
    // Random order around a circle with some jitter.
    std::vector<int> slot(n);
    for (int i = 0; i < n; ++i) slot[i] = i;
    std::shuffle(slot.begin(), slot.end(), rng);
    for (int i = 0; i < n; ++i) {
      const double a = 2 * std::numbers::pi * (slot[i] + 0.3 * unit(rng)) / n;
      const double r = 0.8 + 0.1 * unit(rng);
      x[i] = {r * std::cos(a), r * std::sin(a)};
    }
  } else {
    for (auto& p : x) p = {0.9 * unit(rng), 0.9 * unit(rng)};
  }
  return x;
}

// The penalty is invariant under translation and scaling, so the placement
// is recentred and rescaled into [-1, 1]^2 whenever it drifts.
void renormalize(std::vector<FloatPoint>& x) {
  double lo[2] = {x[0][0], x[0][1]}, hi[2] = {x[0][0], x[0][1]};
  for (const auto& p : x) {
    for (int a = 0; a < 2; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }
  const double span = std::max(hi[0] - lo[0], hi[1] - lo[1]);
  if (span <= 0 || (span > 1.0 && span < 2.0 && lo[0] >= -1 && lo[1] >= -1 && hi[0] <= 1 && hi[1] <= 1)) return;
  const double scale = 1.8 / span;
  for (auto& p : x) {
    for (int a = 0; a < 2; ++a) p[a] = (p[a] - (lo[a] + hi[a]) / 2) * scale;
  }
}

}  // namespace

Target parse_target(const std::string& code) {
  auto level = [&](char c) {
    switch (c) {
      case 's': return Level::Strict;
      case 'w': return Level::Weak;
      case 'a': return Level::Arbitrary;
      default: throw std::invalid_argument("bad target '" + code + "'");
    }
  };
  if (code.size() != 2) throw std::invalid_argument("bad target '" + code + "'");
  return {level(code[0]), level(code[1])};
}

std::string to_string(Target t) {
  auto c = [](Level l) { return l == Level::Strict ? 's' : l == Level::Weak ? 'w' : 'a'; };
  return {c(t.vertices), c(t.midpoints)};
}

double violation_penalty(const std::vector<FloatPoint>& coords, const Graph& g, Target target) {
  if (static_cast<int>(coords.size()) != g.vertex_count()) throw std::invalid_argument("one coordinate pair per vertex");
  if (coords.size() < 2) return 0;
  double diameter = 0;
  for (const auto& a : coords) {
    for (const auto& b : coords) diameter = std::max(diameter, dist(a, b));
  }
  if (diameter < 1e-12) return 1e6;
  const std::vector<FloatPoint> mids = float_midpoints(coords, g);
  double total = set_penalty(coords, target.vertices, diameter) + set_penalty(mids, target.midpoints, diameter);
  std::vector<FloatPoint> all = coords;
  all.insert(all.end(), mids.begin(), mids.end());
  const double gap = kCoincidenceMargin * diameter;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const double d = dist(all[i], all[j]);
      if (d < gap) total += (gap - d) / diameter;
    }
  }
  return total;
}

std::optional<Drawing> certify_coordinates(const std::vector<FloatPoint>& coords, const Graph& g, Target target,
                                           long denominator, int attempts) {
  const bool weak = target.vertices == Level::Weak || target.midpoints == Level::Weak;
  long den = denominator;
  for (int a = 0; a < attempts; ++a, den *= 2) {
    std::vector<mpq_class> z;
    for (const auto& p : coords) {
      z.push_back(rationalize(p[0], den));
      z.push_back(rationalize(p[1], den));
    }
    if (auto d = certify_exact(z, g, target)) return d;
    if (weak) {
      if (auto snapped = snap(z, g, target)) {
        if (auto d = certify_exact(*snapped, g, target)) return d;
      }
    }
  }
  return std::nullopt;
}

SearchOutcome find_drawing(const Graph& g, Target target, const SearchConfig& config) {
  if (config.restarts <= 0 || config.iterations <= 0 || config.initial_step <= 0 || config.cooling <= 0 ||
      config.initial_temperature <= 0 || config.denominator <= 0) {
    throw std::invalid_argument("search config values must be positive");
  }
  const int n = g.vertex_count();
  SearchOutcome out;
  out.best_penalty = std::numeric_limits<double>::infinity();
  if (n == 0) {
    out.status = SearchStatus::Certified;
    out.drawing = Drawing(g, {});
    out.best_penalty = 0;
    return out;
  }

  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(r) + 1)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, n - 1);

    std::vector<FloatPoint> x = initial_placement(n, r, rng);
    double cur = violation_penalty(x, g, target);
    double best = cur;
    std::vector<FloatPoint> best_x = x;
    double step = config.initial_step;
    double temp = config.initial_temperature;
    int last_try = -kCertifyEvery;
    ++out.restarts_used;

    auto finish = [&](std::optional<Drawing> d) {
      out.trace.push_back(best);
      if (best < out.best_penalty) {
        out.best_penalty = best;
        out.best_coordinates = best_x;
      }
      if (d) {
        out.status = SearchStatus::Certified;
        out.drawing = std::move(d);
        out.best_penalty = cur;
        out.best_coordinates = x;
      }
    };

    bool done = false;
    for (int it = 0; it < config.iterations; ++it) {
      if (cur <= kCertifyBelow && it - last_try >= kCertifyEvery) {
        last_try = it;
        if (auto d = certify_coordinates(x, g, target, config.denominator)) {
          finish(std::move(d));
          done = true;
          break;
        }
      }
      // Mostly single-vertex moves; every fourth move shifts all vertices a
      // little, which lets rigid configurations slide out of a corner.
      const bool joint = coin(rng) < 0.25;
      const std::vector<FloatPoint> saved = joint ? x : std::vector<FloatPoint>{};
      const int v = pick(rng);
      const FloatPoint old = x[v];
      if (joint) {
        for (auto& p : x) {
          p[0] += 0.3 * step * gauss(rng);
          p[1] += 0.3 * step * gauss(rng);
        }
      } else {
        x[v][0] = old[0] + step * gauss(rng);
        x[v][1] = old[1] + step * gauss(rng);
      }
      const double next = violation_penalty(x, g, target);
      if (next <= cur || coin(rng) < std::exp((cur - next) / temp)) {
        cur = next;
        if (cur < best) {
          best = cur;
          best_x = x;
        }
      } else if (joint) {
        x = saved;
      } else {
        x[v] = old;
      }
      step *= config.cooling;
      temp *= config.cooling;
      if (it % 64 == 63) renormalize(x);
    }
    if (done) return out;
    std::optional<Drawing> d;
    if (best <= kCertifyBelow) {
      x = best_x;
      cur = best;
      d = certify_coordinates(best_x, g, target, config.denominator);
    }
    const bool hit = d.has_value();
    finish(std::move(d));
    if (hit) return out;
  }
  return out;
}

Drawing k4e_family_drawing(const mpq_class& a, const mpq_class& b) {
  if (a <= 0 || b <= 0 || a + b <= 1) throw std::invalid_argument("k4e family needs a, b > 0 and a + b > 1");
  Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}});
  return Drawing(std::move(g), {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(a), Scalar(b)}});
}

ConvexityReport k4e_family_check(const mpq_class& a, const mpq_class& b) { return classify(k4e_family_drawing(a, b)); }

Graph subdivide(const Graph& g, const std::vector<int>& edges, int times) {
  if (times < 0) throw std::invalid_argument("negative subdivision count");
  std::vector<bool> chosen(g.edge_count(), false);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count() || chosen[e]) throw std::invalid_argument("bad subdivision edge list");
    chosen[e] = true;
  }
  if (times == 0) return g;
  std::vector<Edge> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!chosen[e]) out.push_back(g.edge(e));
  }
  int next = g.vertex_count();
  for (int e : edges) {
    int prev = g.edge(e).u;
    for (int t = 0; t < times; ++t) {
      out.emplace_back(prev, next);
      prev = next++;
    }
    out.emplace_back(prev, g.edge(e).v);
  }
  return Graph(next, std::move(out));
}

SubdivisionReport subdivision_explore(const Graph& g, int max_subdivisions, Target target, const SearchConfig& config,
                                      int pattern_cap) {
  SubdivisionReport report;
  const int m = g.edge_count();
  auto is_matching = [&](const std::vector<int>& set) {
    std::vector<bool> seen(g.vertex_count(), false);
    for (int e : set) {
      const Edge& ed = g.edge(e);
      if (seen[ed.u] || seen[ed.v]) return false;
      seen[ed.u] = seen[ed.v] = true;
    }
    return true;
  };
  for (int c = 0; c <= max_subdivisions; ++c) {
    for (int t = (c == 0 ? 0 : 1); t <= std::max(c, 0); ++t) {
      if (c > 0 && c % t != 0) continue;
      const int s = c == 0 ? 0 : c / t;
      if (s > m) continue;
      std::vector<std::vector<int>> matchings, others;
      std::vector<int> cur;
      std::function<void(int)> choose = [&](int start) {
        if (static_cast<int>(cur.size()) == s) {
          (is_matching(cur) ? matchings : others).push_back(cur);
          return;
        }
        for (int e = start; e < m; ++e) {
          cur.push_back(e);
          choose(e + 1);
          cur.pop_back();
        }
      };
      choose(0);
      matchings.insert(matchings.end(), others.begin(), others.end());
      int tried = 0;
      for (const auto& set : matchings) {
        if (tried++ >= pattern_cap) break;
        ++report.patterns_tried;
        const Graph sub = subdivide(g, set, t);
        SearchOutcome o = find_drawing(sub, target, config);
        if (o.status == SearchStatus::Certified) {
          report.found = true;
          report.subdivisions = c;
          report.per_edge = t;
          report.edges = set;
          report.drawing = std::move(o.drawing);
          return report;
        }
      }
      if (c == 0) break;
    }
  }
  return report;
}

}  // namespace midconvex
