#include <gtest/gtest.h>

#include "midconvex/constructions.hpp"
#include "midconvex/search.hpp"
#include "support.hpp"

using namespace midconvex;
using midconvex::testing::pt;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SearchConfig small_config(std::uint64_t seed = 1) {
  SearchConfig c;
  c.restarts = 4;
  c.iterations = 4000;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Target, ParseAndPrint) {
  const Target t = parse_target("sw");
  EXPECT_EQ(t.vertices, Level::Strict);
  EXPECT_EQ(t.midpoints, Level::Weak);
  for (const char* code : {"ss", "sw", "ws", "ww", "as", "aw", "sa"}) EXPECT_EQ(to_string(parse_target(code)), code);
  EXPECT_THROW(parse_target("s"), std::invalid_argument);
  EXPECT_THROW(parse_target("sx"), std::invalid_argument);
}

TEST(ViolationPenalty, Examples) {
  const Graph c4 = cycle(4);
  const std::vector<FloatPoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_EQ(violation_penalty(square, c4, parse_target("ss")), 0.0);

  const std::vector<FloatPoint> centered{{0, 0}, {1, 0}, {0.5, 0.5}, {0, 1}};
  EXPECT_GT(violation_penalty(centered, c4, parse_target("sa")), 0.0);

  const Graph two(4, {{0, 1}, {2, 3}});
  const std::vector<FloatPoint> shared{{0, 0}, {2, 0}, {0, -2}, {2, 2}};
  EXPECT_GT(violation_penalty(shared, two, parse_target("aa")), 0.0);

  // Scale free.
  std::vector<FloatPoint> big = centered;
  for (auto& p : big) p = {1000 * p[0] + 7, 1000 * p[1] - 3};
  EXPECT_NEAR(violation_penalty(big, c4, parse_target("sa")), violation_penalty(centered, c4, parse_target("sa")),
              1e-9);
}

TEST(FindDrawing, CycleCertifies) {
  const auto out = find_drawing(cycle(5), parse_target("ss"), small_config());
  ASSERT_EQ(out.status, SearchStatus::Certified);
  ASSERT_TRUE(out.drawing.has_value());
  EXPECT_FALSE(validate(*out.drawing).has_value());
  EXPECT_TRUE(classify(*out.drawing).witnesses(Level::Strict, Level::Strict));
  EXPECT_EQ(out.drawing->graph().edges(), cycle(5).edges());
}

TEST(FindDrawing, K4MinusEStrictFails) {
  const auto out = find_drawing(k4_minus_e_drawing().graph(), parse_target("ss"), small_config());
  EXPECT_EQ(out.status, SearchStatus::Failed);
  EXPECT_FALSE(out.drawing.has_value());
  EXPECT_GT(out.best_penalty, 0.0);
  EXPECT_EQ(out.best_coordinates.size(), 4u);
  EXPECT_EQ(out.restarts_used, 4);
  EXPECT_EQ(out.trace.size(), 4u);
}

TEST(FindDrawing, Deterministic) {
  const Graph g = ln_graph(5);
  const auto a = find_drawing(g, parse_target("sw"), small_config(9));
  const auto b = find_drawing(g, parse_target("sw"), small_config(9));
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.best_penalty, b.best_penalty);
  EXPECT_EQ(a.drawing, b.drawing);
  const auto f1 = find_drawing(k4_minus_e_drawing().graph(), parse_target("ss"), small_config(3));
  const auto f2 = find_drawing(k4_minus_e_drawing().graph(), parse_target("ss"), small_config(3));
  EXPECT_EQ(f1.best_coordinates, f2.best_coordinates);
}

TEST(FindDrawing, CorruptedCertificateIsRejected) {
  const auto out = find_drawing(cycle(6), parse_target("ss"), small_config());
  ASSERT_EQ(out.status, SearchStatus::Certified);
  Drawing d = *out.drawing;
  // Pull vertex 0 to the centroid of the others.
  Point c{Scalar(0), Scalar(0)};
  for (int v = 1; v < 6; ++v) c = c + Scalar(1, 5) * d.position(v);
  d.move_vertex(0, c);
  EXPECT_FALSE(classify(d).witnesses(Level::Strict, Level::Strict));

  std::vector<FloatPoint> coords;
  for (const Point& p : d.positions()) coords.push_back({p.x.to_double(), p.y.to_double()});
  EXPECT_FALSE(certify_coordinates(coords, d.graph(), parse_target("ss"), 1024).has_value());
}

TEST(CertifyCoordinates, SnapsNearlyCollinearMidpoints) {
  // K4 - e with the fourth vertex nudged off (2, 1): the weak midpoint set
  // only certifies after snapping onto a common line.
  const Graph g = k4_minus_e_drawing().graph();
  const std::vector<FloatPoint> coords{{1, 0}, {0, 0}, {0, 1}, {2 + 1e-9, 1 - 1e-9}};
  const auto d = certify_coordinates(coords, g, parse_target("sw"), 1 << 20);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(classify(*d).witnesses(Level::Strict, Level::Weak));
}

TEST(FindDrawing, ReproducesConstructionTargets) {
  SearchConfig config;
  config.restarts = 64;
  config.seed = 1;
  struct Case {
    const char* name;
    Graph graph;
    const char* target;
  };
  const Case cases[] = {
      {"C3", cycle(3), "ss"},       {"C6", cycle(6), "ss"},          {"C8", cycle(8), "ss"},
      {"K4-e", k4_minus_e_drawing().graph(), "sw"},                   {"K23", k23_drawing().graph(), "sw"},
      {"L5", ln_graph(5), "sw"},    {"L6", ln_graph(6), "sw"},       {"B5", bn_graph(5), "ss"},
      {"B7", bn_graph(7), "ss"},    {"H2", hk_graph(2), "ss"},       {"P3", pk_graph(3), "sw"},
      {"P4", pk_graph(4), "sw"},    {"K5", complete(5), "ww"},
  };
  for (const Case& c : cases) {
    const Target t = parse_target(c.target);
    const auto out = find_drawing(c.graph, t, config);
    ASSERT_EQ(out.status, SearchStatus::Certified) << c.name << " best " << out.best_penalty;
    EXPECT_TRUE(classify(*out.drawing).witnesses(t.vertices, t.midpoints)) << c.name;
  }
}

TEST(K4eFamily, Examples) {
  auto r = k4e_family_check(2, 1);
  EXPECT_EQ(r.vertices.level, Convexity::Strict);
  EXPECT_EQ(r.midpoints.level, Convexity::WeakNotStrict);
  EXPECT_EQ(k4e_family_drawing(2, 1), k4_minus_e_drawing());

  r = k4e_family_check(mpq_class(1, 2), 1);
  EXPECT_EQ(r.vertices.level, Convexity::Strict);
  EXPECT_NE(r.midpoints.level, Convexity::Strict);

  EXPECT_THROW(k4e_family_check(mpq_class(1, 2), mpq_class(1, 4)), std::invalid_argument);
  EXPECT_THROW(k4e_family_check(-1, 3), std::invalid_argument);
  EXPECT_THROW(k4e_family_check(1, 1), InvalidDrawing);
}

TEST(K4eFamily, GridHasNoStrictStrictDrawing) {
  int checked = 0;
  for (int i = 1; i <= 60; ++i)
    for (int j = 1; j <= 60; ++j) {
      const mpq_class a(i, 20), b(j, 20);
      if (a + b <= 1) continue;
      ConvexityReport r;
      try {
        r = k4e_family_check(a, b);
      } catch (const InvalidDrawing&) {
        continue;
      }
      ++checked;
      EXPECT_FALSE(r.witnesses(Level::Strict, Level::Strict)) << a << "," << b;
      if (r.vertices.level == Convexity::Strict) {
        EXPECT_NE(r.midpoints.level, Convexity::Strict);
      }
    }
  EXPECT_GT(checked, 3000);
}

TEST(Subdivide, Structure) {
  const Graph k4 = complete(4);
  const Graph s = subdivide(k4, {0, 5}, 2);
  EXPECT_EQ(s.vertex_count(), 8);
  EXPECT_EQ(s.edge_count(), 10);
  EXPECT_EQ(s.edge(0), Edge(0, 2));
  EXPECT_EQ(degeneracy(s), 2);
  EXPECT_EQ(subdivide(k4, {}, 3).edges(), k4.edges());
  EXPECT_THROW(subdivide(k4, {6}, 1), std::invalid_argument);
  EXPECT_THROW(subdivide(k4, {1, 1}, 1), std::invalid_argument);
}

TEST(SubdivisionExplore, Examples) {
  auto r = subdivision_explore(cycle(6), 0, parse_target("ss"), small_config());
  EXPECT_TRUE(r.found);
  EXPECT_EQ(r.subdivisions, 0);

  r = subdivision_explore(complete(4), 0, parse_target("ss"), small_config());
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.patterns_tried, 1);
}

TEST(SubdivisionExplore, K33) {
  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  SearchConfig config;
  config.restarts = 8;
  config.seed = 1;
  const auto r = subdivision_explore(k33, 6, parse_target("ss"), config, 4);
  ASSERT_TRUE(r.found);
  EXPECT_LE(r.subdivisions, 6);
  ASSERT_TRUE(r.drawing.has_value());
  EXPECT_EQ(r.drawing->vertex_count(), 6 + r.subdivisions);
  EXPECT_TRUE(classify(*r.drawing).witnesses(Level::Strict, Level::Strict));
}
