#include "midconvex/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "midconvex/transform.hpp"

namespace midconvex {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool certifies(const Drawing& d, Level vertices, Level mids) {
  if (validate(d)) return false;
  return classify(d).witnesses(vertices, mids);
}

Scalar pow2(int e) {
  mpq_class q(1);
  if (e >= 0) q = mpq_class(mpz_class(1) << e);
  else q = mpq_class(mpz_class(1), mpz_class(1) << -e);
  return Scalar(q);
}

}  // namespace

std::vector<Point> near_regular_polygon(int n, long max_denominator) {
  require(n >= 1, "polygon needs at least one vertex");
  std::vector<Point> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    if (2 * j == n) {
      out.push_back({Scalar(-1), Scalar(0)});
      continue;
    }
    const double theta = 2 * std::numbers::pi * j / n;
    const mpq_class t = rationalize(std::tan(theta / 2), max_denominator);
    const mpq_class den = 1 + t * t;
    out.push_back({Scalar(mpq_class((1 - t * t) / den)), Scalar(mpq_class(2 * t / den))});
  }
  for (int j = 1; j < n; ++j) {
    if (out[j] == out[j - 1]) throw std::invalid_argument("denominator bound too small for a " + std::to_string(n) + "-gon");
  }
  return out;
}

Drawing cycle_drawing(int n, const ConstructionParams& params) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Drawing(Graph(n, std::move(edges)), near_regular_polygon(n, params.circle_denominator));
}

Drawing complete_weak_drawing(int n) {
  require(n >= 2, "complete graph needs n >= 2");
  std::vector<Point> pos{{Scalar(0), Scalar(0)}};
  for (int i = 1; i < n; ++i) pos.push_back({Scalar(1), pow2(i)});
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Drawing(Graph(n, std::move(edges)), std::move(pos));
}

Drawing k4_minus_e_drawing() {
  Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}});
  return Drawing(std::move(g), {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(2), Scalar(1)}});
}

Drawing k23_drawing() {
  std::vector<Edge> edges;
  for (int x = 0; x < 3; ++x) {
    for (int y = 3; y < 5; ++y) edges.emplace_back(x, y);
  }
  return Drawing(Graph(5, std::move(edges)), {{Scalar(0), Scalar(0)},
                                               {Scalar(4), Scalar(0)},
                                               {Scalar(3), Scalar(2)},
                                               {Scalar(1), Scalar(1)},
                                               {Scalar(4), Scalar(1)}});
}

// ---------------------------------------------------------------- L_n

namespace {

int ln_u(int i) { return 2 * (i - 1); }
int ln_v(int i, int n) { return (n % 2 == 1 && i == (n + 1) / 2) ? n - 1 : 2 * (i - 1) + 1; }

}  // namespace

Graph ln_graph(int n) {
  require(n >= 2, "L_n needs n >= 2");
  const int a = n / 2;
  const int b = (n + 1) / 2;
  std::vector<Edge> edges{{ln_u(1), ln_v(1, n)}};
  for (int i = 2; i <= a; ++i) edges.emplace_back(ln_u(i), ln_v(i - 1, n));
  for (int j = 2; j <= b; ++j) edges.emplace_back(ln_u(j - 1), ln_v(j, n));
  for (int i = 1; i < a; ++i) edges.emplace_back(ln_u(i), ln_u(i + 1));
  for (int j = 1; j < b; ++j) edges.emplace_back(ln_v(j, n), ln_v(j + 1, n));
  return Graph(n, std::move(edges));
}

Drawing ln_drawing(int n, const ConstructionParams& params) {
  require(n >= 2, "L_n needs n >= 2");
  // Native size 4k+2 at or above n; smaller sizes keep a prefix of the levels.
  const int native = n + ((2 - n) % 4 + 4) % 4;
  const int levels = native / 2;  // 2k+1

  std::vector<Scalar> eps;
  if (params.epsilon.empty()) {
    for (int i = 0; i < levels; ++i) eps.push_back(pow2(i));
  } else {
    require(static_cast<int>(params.epsilon.size()) >= levels, "epsilon schedule too short");
    for (int i = 0; i < levels; ++i) {
      require(params.epsilon[i] > 0 && (i == 0 || params.epsilon[i] > params.epsilon[i - 1]),
              "epsilon schedule must be positive and strictly increasing");
      eps.emplace_back(params.epsilon[i]);
    }
  }
  std::vector<Scalar> delta(levels);
  Scalar acc(0);
  for (int j = levels - 1; j >= 0; --j) {
    acc += eps[j];
    delta[j] = acc;
  }
  auto level_x = [](int j) { return j % 2 == 0 ? Scalar(j / 2) : Scalar(-(j + 1) / 2); };

  std::vector<Point> pos(n);
  for (int i = 1; i <= n / 2; ++i) {
    pos[ln_u(i)] = {level_x(i - 1), delta[i - 1]};
    pos[ln_v(i, n)] = {level_x(i - 1), -delta[i - 1]};
  }
  if (n % 2 == 1) {
    const int j = n / 2;
    pos[n - 1] = {level_x(j), -delta[j]};
  }
  Drawing d(ln_graph(n), std::move(pos));
  if (!certifies(d, Level::Strict, Level::Weak)) {
    throw CertificationFailure("L_" + std::to_string(n) + " drawing failed certification");
  }
  return d;
}

// ---------------------------------------------------------------- B_n

Graph bn_graph(int n) {
  require(n >= 3 && n % 2 == 1, "B_n needs odd n >= 3");
  const int h = (n - 3) / 2;
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int i = 1; i <= h; ++i) edges.emplace_back(0, 2 + i);
  for (int i = 1; i <= h; ++i) edges.emplace_back(1, 2 + h + i);
  for (int i = 1; i <= h; ++i) edges.emplace_back(2 + i, 2 + h + (h + 1 - i));
  return Graph(n, std::move(edges));
}

namespace {

// Positions for B_n with h = (n-3)/2 odd (or zero). Side vertices move along
// their side lines by 2^(h+1-i) eps, which spreads the diagonal midpoints, and
// bulge outward by eps/8 * i(h+1-i) so the sides become strictly convex. w is
// placed so that m_uw falls between its neighbours on the upper midpoint chain.
std::vector<Point> bn_positions(int h, const Scalar& eps) {
  const Point u{Scalar(-1), Scalar(0)};
  const Point v{Scalar(1), Scalar(0)};
  if (h == 0) return {u, v, {Scalar(0), Scalar(1)}};
  const Scalar eta = eps * Scalar(1, 8);
  std::vector<Point> left(h + 1), right(h + 1);
  for (int i = 1; i <= h; ++i) {
    const Scalar a = pow2(h + 1 - i) * eps;
    const Scalar b = eta * Scalar(static_cast<long>(i) * (h + 1 - i));
    left[i] = {Scalar(-1 - i) + a - b, Scalar(i) - a - b};
    right[i] = {Scalar(1 + i) - a + b, Scalar(i) - a - b};
  }
  const Scalar cut(-1, 2);
  std::optional<Point> lo;
  std::optional<Point> hi;
  auto consider_left = [&](const Point& p) {
    if (p.x < cut && (!lo || lex_less(*lo, p))) lo = p;
  };
  consider_left(midpoint(u, left[h]));
  for (int i = 1; i <= h; ++i) {
    const Point d = midpoint(left[i], right[h + 1 - i]);
    consider_left(d);
    if (d.x > cut && (!hi || lex_less(d, *hi))) hi = d;
  }
  const Scalar t = (cut - lo->x) / (hi->x - lo->x);
  const Scalar chord = lo->y + t * (hi->y - lo->y);
  const Scalar y = chord + Scalar(1, 2) * (hi->y - chord);

  std::vector<Point> pos{u, v, {Scalar(0), Scalar(2) * y}};
  for (int i = 1; i <= h; ++i) pos.push_back(left[i]);
  for (int i = 1; i <= h; ++i) pos.push_back(right[i]);
  return pos;
}

Drawing bn_native(int n, const ConstructionParams& params) {
  const int h = (n - 3) / 2;
  Scalar eps = pow2(-(1 + n / 4));
  for (int attempt = 0; attempt < params.retry_budget; ++attempt) {
    Drawing d(bn_graph(n), bn_positions(h, eps));
    if (certifies(d, Level::Strict, Level::Strict)) return d;
    eps *= Scalar(1, 2);
  }
  throw CertificationFailure("B_" + std::to_string(n) + ": eps budget exhausted");
}

}  // namespace

Drawing bn_drawing(int n, const ConstructionParams& params) {
  require(n >= 3 && n % 2 == 1, "B_n needs odd n >= 3");
  const int h = (n - 3) / 2;
  if (h == 0 || h % 2 == 1) return bn_native(n, params);

  // Drop the pair p^l_{h+1}, p^r_1 from B_{n+2}; the rest relabels onto B_n.
  const Drawing big = bn_native(n + 2, params);
  const int big_h = h + 1;
  std::vector<Point> pos{big.position(0), big.position(1), big.position(2)};
  for (int i = 1; i <= h; ++i) pos.push_back(big.position(2 + i));
  for (int i = 1; i <= h; ++i) pos.push_back(big.position(2 + big_h + i + 1));
  Drawing d(bn_graph(n), std::move(pos));
  if (!certifies(d, Level::Strict, Level::Strict)) {
    throw CertificationFailure("B_" + std::to_string(n) + " drawing failed certification");
  }
  return d;
}

// ---------------------------------------------------------------- H_k

Graph hk_graph(int k) {
  require(k >= 2, "H_k needs k >= 2");
  const int m = 2 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  for (int i = 1; i <= k; ++i) {
    const int u = m + i - 1;
    edges.emplace_back((2 * i - 1) % m, u);
    edges.emplace_back((2 * i + 2) % m, u);
  }
  return Graph(3 * k, std::move(edges));
}

namespace {

// Parameter interval of {p + t*dir} inside the closed triangle abc.
std::optional<std::pair<Scalar, Scalar>> clip_line(const Point& p, const Point& dir, Point a, Point b, Point c) {
  if (orient(a, b, c) < 0) std::swap(b, c);
  const Point tri[3] = {a, b, c};
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  for (int i = 0; i < 3; ++i) {
    const Point& s = tri[i];
    const Point& e = tri[(i + 1) % 3];
    const Point side = e - s;
    const Scalar c0 = side.x * (p.y - s.y) - side.y * (p.x - s.x);
    const Scalar c1 = side.x * dir.y - side.y * dir.x;
    if (c1.sign() == 0) {
      if (c0.sign() < 0) return std::nullopt;
      continue;
    }
    const Scalar t = -c0 / c1;
    if (c1.sign() > 0) {
      if (!lo || t > *lo) lo = t;
    } else if (!hi || t < *hi) {
      hi = t;
    }
  }
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

std::optional<std::vector<Point>> hk_positions(int k, long den) {
  const int m = 2 * k;
  std::vector<Point> pos = near_regular_polygon(m, den);
  for (int i = 1; i <= k; ++i) {
    const Point& xp = pos[(2 * i - 1) % m];
    const Point& x = pos[(2 * i) % m];
    const Point& y = pos[(2 * i + 1) % m];
    const Point me = midpoint(x, y);
    const Point outward{y.y - x.y, x.x - y.x};
    // The midpoint of x' and the new vertex must lie on the line through
    // (m_e + x')/2 normal to e, inside the triangle m_{x'x}, x, m_e.
    const Point base = midpoint(me, xp);
    auto range = clip_line(base, outward, midpoint(xp, x), x, me);
    if (!range) return std::nullopt;
    const Point mid = base + (Scalar(1, 2) * (range->first + range->second)) * outward;
    pos.push_back(Scalar(2) * mid - xp);
  }
  return pos;
}

}  // namespace

Drawing hk_drawing(int k, const ConstructionParams& params) {
  require(k >= 2, "H_k needs k >= 2");
  long den = params.circle_denominator;
  for (int attempt = 0; attempt < params.retry_budget; ++attempt, den *= 4) {
    std::optional<std::vector<Point>> pos;
    try {
      pos = hk_positions(k, den);
    } catch (const std::invalid_argument&) {
      continue;  // polygon too coarse
    }
    if (!pos) continue;
    Drawing d(hk_graph(k), std::move(*pos));
    if (certifies(d, Level::Strict, Level::Strict)) return d;
  }
  throw CertificationFailure("H_" + std::to_string(k) + ": no base polygon certified");
}

K33Witness h3_k33_witness() {
  K33Witness w;
  w.side_a = {0, 2, 4};
  w.side_b = {1, 3, 5};
  w.paths = {{{0, 1}, {0, 7, 3}, {0, 5}, {2, 1}, {2, 3}, {2, 8, 5}, {4, 6, 1}, {4, 3}, {4, 5}}};
  return w;
}

bool check_k33_witness(const Graph& g, const K33Witness& w) {
  std::vector<int> used(g.vertex_count(), 0);
  for (int v : w.side_a) {
    if (v < 0 || v >= g.vertex_count() || used[v]++) return false;
  }
  for (int v : w.side_b) {
    if (v < 0 || v >= g.vertex_count() || used[v]++) return false;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const std::vector<int>& path = w.paths[3 * i + j];
      if (path.size() < 2 || path.front() != w.side_a[i] || path.back() != w.side_b[j]) return false;
      for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        const int a = path[s];
        const int b = path[s + 1];
        if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || !g.has_edge(a, b)) return false;
      }
      for (std::size_t s = 1; s + 1 < path.size(); ++s) {
        if (used[path[s]]++) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- P_k

Graph pk_graph(int k) {
  require(k >= 3, "P_k needs k >= 3");
  const int m = 2 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < m; i += 2) edges.emplace_back(i, i + 1);
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 2) % m);
  return Graph(m, std::move(edges));
}

namespace {

// cos(pi * j / 4) and cos(pi * j / 6) in Q(sqrt 2) and Q(sqrt 3).
Scalar cos_eighth(int j) {
  const Scalar s(mpq_class(0), mpq_class(1, 2), 2);
  static const int table[8] = {2, 1, 0, -1, -2, -1, 0, 1};
  const int t = table[((j % 8) + 8) % 8];
  if (t == 2) return Scalar(1);
  if (t == -2) return Scalar(-1);
  return Scalar(t) * s;
}

Scalar cos_twelfth(int j) {
  const Scalar s(mpq_class(0), mpq_class(1, 2), 3);
  switch (((j % 12) + 12) % 12) {
    case 0: return Scalar(1);
    case 1: case 11: return s;
    case 2: case 10: return Scalar(1, 2);
    case 3: case 9: return Scalar(0);
    case 4: case 8: return Scalar(-1, 2);
    case 5: case 7: return -s;
    default: return Scalar(-1);
  }
}

}  // namespace

Drawing pk_drawing(int k) {
  std::vector<Point> pos;
  if (k == 3) {
    pos = {{Scalar(1), Scalar(0)},         {Scalar(1, 2), Scalar(1, 2)},   {Scalar(-1, 2), Scalar(1, 2)},
           {Scalar(-1), Scalar(0)},        {Scalar(-1, 2), Scalar(-1, 2)}, {Scalar(1, 2), Scalar(-1, 2)}};
  } else if (k == 4) {
    for (int j = 0; j < 8; ++j) pos.push_back({cos_eighth(j), cos_eighth(j - 2)});
  } else if (k == 6) {
    for (int j = 0; j < 12; ++j) pos.push_back({cos_twelfth(j), cos_twelfth(j - 3)});
  } else {
    throw std::invalid_argument("P_" + std::to_string(k) + " has no exact drawing; use float mode (k in {3, 4, 6})");
  }
  return Drawing(pk_graph(k), std::move(pos));
}

FloatPrism pk_float_check(int k) {
  require(k >= 3, "P_k needs k >= 3");
  const int m = 2 * k;
  FloatPrism out;
  for (int j = 0; j < m; ++j) {
    const double a = std::numbers::pi * j / k;
    out.positions.push_back({std::cos(a), std::sin(a)});
  }
  auto mid = [&](int a, int b) {
    return std::array<double, 2>{(out.positions[a][0] + out.positions[b][0]) / 2,
                                 (out.positions[a][1] + out.positions[b][1]) / 2};
  };
  std::vector<std::array<double, 2>> outer;
  for (int i = 0; i < m; i += 2) outer.push_back(mid(i, i + 1));
  auto boundary_distance = [&](const std::array<double, 2>& p) {
    double best = INFINITY;
    for (int i = 0; i < k; ++i) {
      const auto& a = outer[i];
      const auto& b = outer[(i + 1) % k];
      const double dx = b[0] - a[0], dy = b[1] - a[1];
      double t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / (dx * dx + dy * dy);
      t = std::clamp(t, 0.0, 1.0);
      best = std::min(best, std::hypot(p[0] - a[0] - t * dx, p[1] - a[1] - t * dy));
    }
    return best;
  };
  const Graph g = pk_graph(k);
  for (const Edge& e : g.edges()) out.max_deviation = std::max(out.max_deviation, boundary_distance(mid(e.u, e.v)));
  return out;
}

// ---------------------------------------------------------------- suppression

Drawing suppress_degree2(const Drawing& d, int v) {
  const Graph& g = d.graph();
  require(v >= 0 && v < g.vertex_count(), "vertex out of range");
  require(g.degree(v) == 2, "vertex " + std::to_string(v) + " does not have degree 2");
  const std::vector<int> nb = g.neighbors(v);
  require(!g.has_edge(nb[0], nb[1]), "neighbours of " + std::to_string(v) + " are adjacent");
  std::vector<int> keep;
  std::vector<Point> pos;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == v) continue;
    keep.push_back(w);
    pos.push_back(d.position(w));
  }
  Graph out = g.induced(keep);
  auto shift = [v](int w) { return w > v ? w - 1 : w; };
  out.add_edge(shift(nb[0]), shift(nb[1]));
  return Drawing(std::move(out), std::move(pos));
}

}  // namespace midconvex
