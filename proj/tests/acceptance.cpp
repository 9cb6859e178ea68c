// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and budgets are fixed below.

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "midconvex/constructions.hpp"
#include "midconvex/drawing_io.hpp"
#include "midconvex/minkowski.hpp"
#include "midconvex/search.hpp"
#include "midconvex/seeing.hpp"
#include "midconvex/transform.hpp"
#include "support.hpp"

using namespace midconvex;
namespace fs = std::filesystem;

namespace {

constexpr double kLnSecondsPerInstance = 1.0;
constexpr double kOracleSeconds = 300.0;
constexpr int kRandomCertifiedNeeded = 100;
constexpr int kRandomAttemptCap = 600;
constexpr int kOracleInstances = 200;
constexpr int kOracleMaxPoints = 18;
constexpr int kRandomConvexSets = 50;
constexpr int kRefutationRestarts = 64;
constexpr int kRefutationIterations = 10000;
constexpr int kStrictifyInstances = 20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Result& r) {
  std::printf("criterion %2d: %s  %s (%s)\n", id, r.pass ? "PASS" : "FAIL", title.c_str(), r.detail.c_str());
  std::fflush(stdout);
  if (!r.pass) ++failures;
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Every drawing the suite certifies, with a label for diagnostics.
struct Certified {
  std::string label;
  Drawing drawing;
};

std::vector<Certified> construction_outputs() {
  std::vector<Certified> out;
  for (int n = 3; n <= 12; ++n) out.push_back({"cycle " + std::to_string(n), cycle_drawing(n)});
  for (int n = 2; n <= 9; ++n) out.push_back({"complete-weak " + std::to_string(n), complete_weak_drawing(n)});
  out.push_back({"k4e", k4_minus_e_drawing()});
  out.push_back({"k23", k23_drawing()});
  for (int n = 2; n <= 30; ++n) out.push_back({"ln " + std::to_string(n), ln_drawing(n)});
  for (int n = 3; n <= 29; n += 2) out.push_back({"bn " + std::to_string(n), bn_drawing(n)});
  for (int k = 2; k <= 8; ++k) out.push_back({"hk " + std::to_string(k), hk_drawing(k)});
  for (int k : {3, 4, 6}) out.push_back({"pk " + std::to_string(k), pk_drawing(k)});
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, int m) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  return Graph(n, all);
}

struct RandomSearch {
  std::vector<Certified> certified;
  int attempts = 0;
};

// Random graphs with 4 to 6 vertices and n-1 to 2n-2 edges, searched for a
// (strict, weak) drawing with a small budget.
RandomSearch random_search_witnesses() {
  RandomSearch out;
  std::mt19937_64 rng(20240601);
  SearchConfig config;
  config.restarts = 4;
  config.iterations = 3000;
  const Target target = parse_target("sw");
  while (static_cast<int>(out.certified.size()) < kRandomCertifiedNeeded && out.attempts < kRandomAttemptCap) {
    const int n = std::uniform_int_distribution<int>(4, 6)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, 2 * n - 2)(rng);
    const Graph g = random_graph(rng, n, m);
    config.seed = rng();
    ++out.attempts;
    const SearchOutcome s = find_drawing(g, target, config);
    if (s.status == SearchStatus::Certified) {
      out.certified.push_back({fmt("random n=%d m=%d", n, m), *s.drawing});
    }
  }
  return out;
}

bool is_sw(const Drawing& d) {
  return !validate(d) && classify(d).witnesses(Level::Strict, Level::Weak);
}

Result ln_lower_bound() {
  Result r;
  std::string rows;
  for (int n : {6, 10, 14, 18, 22}) {
    const auto start = Clock::now();
    const Drawing d = ln_drawing(n);
    const bool ok = is_sw(d) && d.edge_count() == 2 * n - 3;
    const double t = seconds_since(start);
    r.pass = r.pass && ok && t < kLnSecondsPerInstance;
    rows += fmt("%sn=%d m=%d %.3fs", rows.empty() ? "" : ", ", n, d.edge_count(), t);
  }
  r.detail = rows;
  return r;
}

Result sw_upper_bound_audit(const std::vector<Certified>& constructions, const RandomSearch& random) {
  int witnesses = 0, violations = 0;
  for (const auto* set : {&constructions, &random.certified}) {
    for (const Certified& c : *set) {
      if (!is_sw(c.drawing)) continue;
      ++witnesses;
      const int n = c.drawing.vertex_count();
      if (n >= 2 && c.drawing.edge_count() > 2 * n - 3) ++violations;
    }
  }
  Result r;
  const int random_count = static_cast<int>(random.certified.size());
  r.pass = violations == 0 && random_count >= kRandomCertifiedNeeded;
  r.detail = fmt("%d witnesses, %d from search in %d attempts, %d violations", witnesses, random_count,
                 random.attempts, violations);
  return r;
}

Result bn_lower_bound() {
  Result r;
  int ok = 0;
  for (int n = 3; n <= 27; n += 2) {
    const Drawing d = bn_drawing(n);
    const bool good = !validate(d) && classify(d).witnesses(Level::Strict, Level::Strict) &&
                      d.edge_count() == 3 * (n - 1) / 2;
    ok += good;
    if (!good) r.detail += fmt("n=%d bad; ", n);
  }
  r.pass = ok == 13;
  r.detail += fmt("%d/13 odd n in 3..27 certified (strict, strict) with floor(3(n-1)/2) edges", ok);
  return r;
}

Result nonplanar_member() {
  const Drawing d = hk_drawing(3);
  const bool ss = !validate(d) && classify(d).witnesses(Level::Strict, Level::Strict);
  const K33Witness w = h3_k33_witness();
  const bool witness_ok = check_k33_witness(d.graph(), w);
  std::vector<bool> covered(d.vertex_count(), false);
  for (const auto& path : w.paths)
    for (int v : path) covered[v] = true;
  const bool all_covered = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  Result r;
  r.pass = ss && witness_ok && all_covered;
  r.detail = fmt("H_3 n=%d m=%d ss=%s, K33 witness %s, covers all vertices %s", d.vertex_count(), d.edge_count(),
                 ss ? "yes" : "no", witness_ok ? "valid" : "invalid", all_covered ? "yes" : "no");
  return r;
}

Result cubic_member() {
  Result r;
  for (int k : {3, 4, 6}) {
    const Drawing d = pk_drawing(k);
    bool regular = true;
    for (int v = 0; v < d.vertex_count(); ++v) regular = regular && d.graph().degree(v) == 3;
    const int root = drawing_root(d);
    const int expected_root = k == 3 ? 0 : (k == 4 ? 2 : 3);
    const bool ok = is_sw(d) && regular && root == expected_root && d.vertex_count() == 2 * k;
    r.pass = r.pass && ok;
    r.detail += fmt("%sP_%d %s field %s", r.detail.empty() ? "" : ", ", k, ok ? "ok" : "bad",
                    root == 0 ? "Q" : (root == 2 ? "Q(sqrt2)" : "Q(sqrt3)"));
  }
  return r;
}

std::vector<const Certified*> strict_vertex_drawings(const std::vector<Certified>& a, const std::vector<Certified>& b) {
  std::vector<const Certified*> out;
  for (const auto* set : {&a, &b})
    for (const Certified& c : *set) {
      const auto rep = classify(c.drawing);
      if (rep.witnesses(Level::Strict, Level::Weak)) out.push_back(&c);
    }
  return out;
}

Result interior_edges_unseen(const std::vector<const Certified*>& drawings) {
  int checked = 0, degenerate = 0, seen_interior = 0, over = 0;
  for (const Certified* c : drawings) {
    const SeeingProfile p = seeing_profile(c->drawing);
    if (p.degenerate) {
      ++degenerate;
      continue;
    }
    ++checked;
    seen_interior += static_cast<int>(p.seen_interior.size());
    for (int s : p.seen_incident) over += s > 2;
  }
  Result r;
  r.pass = seen_interior == 0 && over == 0 && checked > 0;
  r.detail = fmt("%d drawings, %d degenerate skipped, %d seen interior edges, %d vertices seeing >2", checked,
                 degenerate, seen_interior, over);
  return r;
}

Result exterior_structure(const std::vector<const Certified*>& drawings) {
  int structural = 0, few_exterior = 0, identity_cases = 0, identity_broken = 0, unseen = 0;
  for (const Certified* c : drawings) {
    const Drawing& d = c->drawing;
    const SeeingProfile p = seeing_profile(d);
    unseen += static_cast<int>(p.unseen_edges.size());
    if (d.graph().min_degree() >= 2 && d.edge_count() >= 3) {
      ++structural;
      if (p.doubly_exterior < 3) ++few_exterior;
    }
    if (!p.degenerate) {
      ++identity_cases;
      if (!p.identity_applies() || !p.identity_holds(d.edge_count())) ++identity_broken;
    }
  }
  Result r;
  r.pass = few_exterior == 0 && identity_broken == 0 && unseen == 0;
  r.detail = fmt("%d with min degree >= 2: %d below 3 doubly exterior; identity on %d non-degenerate: %d broken",
                 structural, few_exterior, identity_cases, identity_broken);
  return r;
}

// Corners of the hull of random grid points, at most `n_max` of them.
std::vector<PointSet> random_convex_sets(int count, int n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PointSet> out;
  while (static_cast<int>(out.size()) < count) {
    auto hull = convex_hull(midconvex::testing::random_points(rng, 30, 60));
    if (hull.size() < 3) continue;
    const int n = std::uniform_int_distribution<int>(3, n_max)(rng);
    if (static_cast<int>(hull.size()) > n) hull.resize(n);
    out.push_back(make_point_set(hull));
  }
  return out;
}

struct GtildeSweep {
  std::vector<GtildeReport> regular;
  std::vector<GtildeReport> random;
  GtildeReport triangle;
};

GtildeSweep gtilde_sweep() {
  GtildeSweep s;
  for (int n = 3; n <= 8; ++n) s.regular.push_back(gtilde_experiment(make_point_set(cycle_drawing(n).positions())));
  for (const PointSet& a : random_convex_sets(kRandomConvexSets, 8, 4242)) s.random.push_back(gtilde_experiment(a));
  const auto pt = [](long x, long y) { return Point{Scalar(x), Scalar(y)}; };
  s.triangle = gtilde_experiment(make_point_set({pt(0, 0), pt(2, 0), pt(0, 2)}));
  return s;
}

Result minkowski_weak(const GtildeSweep& s) {
  Result r;
  std::string exact;
  for (const GtildeReport& g : s.regular) {
    r.pass = r.pass && g.weak_max == 2 * g.n;
    exact += fmt("%s%d:%d", exact.empty() ? "" : " ", g.n, g.weak_max);
  }
  int violations = 0;
  for (const GtildeReport& g : s.random) violations += g.weak_max > 2 * g.n;
  r.pass = r.pass && violations == 0;
  r.detail = fmt("near-regular n:weak_max %s; %d random sets, %d above 2n", exact.c_str(),
                 static_cast<int>(s.random.size()), violations);
  return r;
}

Result minkowski_strict(const GtildeSweep& s) {
  Result r;
  std::string rows;
  for (const GtildeReport& g : s.regular) {
    r.pass = r.pass && g.strict_max >= 3 * g.n / 2 && g.strict_max <= 2 * g.n - 2;
    rows += fmt("%s%d:%d", rows.empty() ? "" : " ", g.n, g.strict_max);
  }
  int violations = 0;
  for (const GtildeReport& g : s.random) violations += g.strict_max > 2 * g.n - 2;
  r.pass = r.pass && violations == 0 && s.triangle.strict_max == 4;
  r.detail = fmt("near-regular n:strict_max %s; triangle %d; %d random sets, %d above 2n-2", rows.c_str(),
                 s.triangle.strict_max, static_cast<int>(s.random.size()), violations);
  return r;
}

Result oracle_equivalence() {
  std::mt19937_64 rng(777);
  const auto start = Clock::now();
  int mismatches = 0, instances = 0, fallbacks = 0;
  for (int i = 0; i < kOracleInstances; ++i) {
    const int size = std::uniform_int_distribution<int>(1, kOracleMaxPoints)(rng);
    const long range = i % 2 ? 6 : 40;
    const PointSet p = make_point_set(midconvex::testing::random_points(rng, size, range));
    ++instances;
    for (Level mode : {Level::Strict, Level::Weak}) {
      const auto dp = dp_largest(p, mode);
      if (!dp) {
        ++fallbacks;
        ++mismatches;
        continue;
      }
      if (dp->size != brute_force_largest(p, mode).size) ++mismatches;
    }
  }
  const double t = seconds_since(start);
  Result r;
  r.pass = mismatches == 0 && instances >= kOracleInstances && t < kOracleSeconds;
  r.detail = fmt("%d point sets up to %d points, both modes, %d mismatches, %d unverified DP witnesses, %.1fs", instances,
                 kOracleMaxPoints, mismatches, fallbacks, t);
  return r;
}

Graph l8_plus_leaf() {
  Graph g = ln_graph(8);
  const int w = g.add_vertex();
  g.add_edge(4, w);  // vertex 4 is r_1
  return g;
}

Result refutation() {
  int grid = 0, strict_strict = 0;
  for (int i = 1; i <= 60; ++i)
    for (int j = 1; j <= 60; ++j) {
      const mpq_class a(i, 20), b(j, 20);
      if (a + b <= 1) continue;
      try {
        strict_strict += k4e_family_check(a, b).witnesses(Level::Strict, Level::Strict);
        ++grid;
      } catch (const InvalidDrawing&) {
      }
    }

  SearchConfig config;
  config.restarts = kRefutationRestarts;
  config.iterations = kRefutationIterations;
  config.seed = 1;
  const SearchOutcome k4e = find_drawing(k4_minus_e_drawing().graph(), parse_target("ss"), config);
  const SearchOutcome leaf = find_drawing(l8_plus_leaf(), parse_target("sw"), config);

  Result r;
  r.pass = strict_strict == 0 && k4e.status == SearchStatus::Failed && leaf.status == SearchStatus::Failed;
  r.detail = fmt("grid %d drawings, %d strict/strict; K4-e ss %s (best %.2e); L8+leaf sw %s (best %.2e)", grid,
                 strict_strict, k4e.status == SearchStatus::Failed ? "not found" : "found", k4e.best_penalty,
                 leaf.status == SearchStatus::Failed ? "not found" : "found", leaf.best_penalty);
  return r;
}

Result perturbation_and_leaf() {
  int strictified = 0;
  for (const Drawing& d : midconvex::testing::weak_strict_instances(kStrictifyInstances, 12)) {
    try {
      const Drawing s = strictify(d);
      strictified += !validate(s) && classify(s).witnesses(Level::Strict, Level::Strict);
    } catch (const std::exception&) {
    }
  }
  const Drawing b7 = bn_drawing(7);
  bool leaf_ok = false;
  int edge = -1;
  for (int i = 0; i < b7.edge_count(); ++i) {
    if (is_v_crossing(b7, i)) continue;
    edge = i;
    const Edge e = b7.graph().edge(i);
    const Drawing out = add_leaf(b7, e.u, e.v);
    leaf_ok = !validate(out) && classify(out).witnesses(Level::Strict, Level::Strict) &&
              out.vertex_count() == b7.vertex_count() + 1 && out.edge_count() == b7.edge_count() + 1;
    break;
  }
  Result r;
  r.pass = strictified == kStrictifyInstances && leaf_ok;
  r.detail = fmt("strictify %d/%d certified; add_leaf on B_7 at edge %d: %s", strictified, kStrictifyInstances, edge,
                 leaf_ok ? "n+1, m+1, strict/strict" : "failed");
  return r;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + MIDCONVEX_CLI + "' " + args + " 2>&1";
  std::string out;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    out += "\n[exit " + std::to_string(pclose(pipe)) + "]";
  }
  return out;
}

Result determinism_and_round_trip(const std::vector<Certified>& constructions) {
  const fs::path dir = fs::temp_directory_path() / fs::path("midconvex_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string graph_file = (dir / "l6.graph").string();
  std::ofstream(graph_file) << write_graph(ln_graph(6));
  const std::string drawing_file = (dir / "bn9.txt").string();
  std::ofstream(drawing_file) << write_drawing(bn_drawing(9));

  const std::vector<std::string> commands{
      "search --graph '" + graph_file + "' --target sw --seed 42 --restarts 8 -o -",
      "search --graph '" + graph_file + "' --target ss --seed 7 --restarts 2 --iterations 1000",
      "construct hk 5",
      "classify '" + drawing_file + "'",
      "table --family bn --n-max 15",
      "svg '" + drawing_file + "' -o -",
  };
  int identical = 0;
  for (const std::string& c : commands) identical += run_cli(c) == run_cli(c);

  int round_trips = 0;
  for (const Certified& c : constructions) {
    const std::string text = write_drawing(c.drawing);
    round_trips += write_drawing(parse_drawing(text)) == text && parse_drawing(text) == c.drawing;
  }
  // Through the CLI: construct to a file, read back with the library, rewrite.
  const std::string file = (dir / "pk6.txt").string();
  run_cli("construct pk 6 -o '" + file + "'");
  std::ifstream in(file);
  std::stringstream text;
  text << in.rdbuf();
  const bool cli_round_trip = text.str() == write_drawing(pk_drawing(6)) &&
                              write_drawing(parse_drawing(text.str())) == text.str();
  fs::remove_all(dir);

  Result r;
  const int total = static_cast<int>(constructions.size());
  r.pass = identical == static_cast<int>(commands.size()) && round_trips == total && cli_round_trip;
  r.detail = fmt("%d/%d CLI commands byte-identical across runs; %d/%d drawings round-trip; CLI file round-trip %s",
                 identical, static_cast<int>(commands.size()), round_trips, total, cli_round_trip ? "exact" : "differs");
  return r;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const std::vector<Certified> constructions = construction_outputs();
  const RandomSearch random = random_search_witnesses();
  const auto sw_drawings = strict_vertex_drawings(constructions, random.certified);
  const GtildeSweep gtilde = gtilde_sweep();

  report(1, "L_n reaches 2n-3 edges with strict vertices and weak midpoints", ln_lower_bound());
  report(2, "no (strict, weak) witness exceeds 2n-3 edges", sw_upper_bound_audit(constructions, random));
  report(3, "B_n reaches floor(3(n-1)/2) edges with strict vertices and midpoints", bn_lower_bound());
  report(4, "H_3 is a non-planar strict/strict member", nonplanar_member());
  report(5, "P_3, P_4, P_6 are cubic (strict, weak) members in exact arithmetic", cubic_member());
  report(6, "no vertex sees an interior edge; at most two seen incident edges", interior_edges_unseen(sw_drawings));
  report(7, "three doubly exterior edges and the seeing identity", exterior_structure(sw_drawings));
  report(8, "largest weakly convex subset of A+A", minkowski_weak(gtilde));
  report(9, "largest strictly convex subset of A+A", minkowski_strict(gtilde));
  report(10, "DP agrees with brute force", oracle_equivalence());
  report(11, "K_4-e and L_8 plus a leaf resist search", refutation());
  report(12, "strictify and add_leaf certify", perturbation_and_leaf());
  report(13, "deterministic CLI output and exact round-trip", determinism_and_round_trip(constructions));
  std::printf("%d of 13 criteria failed, %.1fs total\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
