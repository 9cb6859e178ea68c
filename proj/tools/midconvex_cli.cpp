// midconvex: construct, verify, classify and search drawings whose vertices
// and edge midpoints are in convex position; Minkowski sum experiments.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "midconvex/constructions.hpp"
#include "midconvex/drawing_io.hpp"
#include "midconvex/minkowski.hpp"
#include "midconvex/search.hpp"
#include "midconvex/seeing.hpp"
#include "midconvex/svg.hpp"

using namespace midconvex;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

const char* status_name(Convexity c) {
  switch (c) {
    case Convexity::Strict: return "strict";
    case Convexity::WeakNotStrict: return "weak";
    case Convexity::NonConvex: return "non-convex";
  }
  return "?";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ------------------------------------------------------------ construct

int run_construct(const std::string& name, const std::vector<int>& params, bool float_mode, const std::string& out) {
  auto arg = [&](const char* what) {
    if (params.size() != 1) throw UsageError(name + " takes one parameter (" + what + ")");
    return params[0];
  };
  auto none = [&]() {
    if (!params.empty()) throw UsageError(name + " takes no parameters");
  };
  Drawing d;
  try {
    if (name == "cycle") d = cycle_drawing(arg("n"));
    else if (name == "complete-weak") d = complete_weak_drawing(arg("n"));
    else if (name == "k4e") { none(); d = k4_minus_e_drawing(); }
    else if (name == "k23") { none(); d = k23_drawing(); }
    else if (name == "ln") d = ln_drawing(arg("n"));
    else if (name == "bn") d = bn_drawing(arg("n"));
    else if (name == "hk") d = hk_drawing(arg("k"));
    else if (name == "pk") {
      const int k = arg("k");
      if (float_mode) {
        const FloatPrism f = pk_float_check(k);
        std::string text = "# P_" + std::to_string(k) + " float mode (not exact)\n";
        text += "# max midpoint deviation " + fmt(f.max_deviation) + "\n";
        for (std::size_t i = 0; i < f.positions.size(); ++i) {
          char buf[96];
          std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", i, f.positions[i][0], f.positions[i][1]);
          text += buf;
        }
        emit(out, text);
        return f.max_deviation < 1e-12 ? kOk : kFailed;
      }
      d = pk_drawing(k);
    } else {
      throw UsageError("unknown construction '" + name + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(out, write_drawing(d));
  return kOk;
}

// ------------------------------------------------------------ verify / classify

int run_verify(const std::string& file) {
  const Drawing d = parse_drawing(slurp(file));
  if (auto v = validate(d)) {
    std::cout << "invalid: " << v->describe(d.graph()) << "\n";
    return kFailed;
  }
  std::cout << "valid: " << d.vertex_count() << " vertices, " << d.edge_count() << " edges\n";
  return kOk;
}

int run_classify(const std::string& file) {
  const Drawing d = parse_drawing(slurp(file));
  if (auto v = validate(d)) {
    std::cout << "invalid: " << v->describe(d.graph()) << "\n";
    return kFailed;
  }
  const ConvexityReport r = classify(d);
  const int n = d.vertex_count();
  const int m = d.edge_count();
  std::ostringstream os;
  os << "vertices: " << status_name(r.vertices.level) << "\n";
  os << "midpoints: " << status_name(r.midpoints.level) << "\n";
  os << "edges: " << m << " (n = " << n << ", 2n-3 = " << 2 * n - 3 << ", floor(3(n-1)/2) = " << (3 * (n - 1)) / 2
     << ")\n";
  os << "classes:";
  const Level levels[] = {Level::Strict, Level::Weak, Level::Arbitrary};
  for (Level vl : levels) {
    for (Level ml : {Level::Strict, Level::Weak}) {
      os << " " << to_string(Target{vl, ml}) << "=" << (r.witnesses(vl, ml) ? "yes" : "no");
    }
  }
  os << "\n";
  os << "degeneracy: " << degeneracy(d.graph()) << "\n";
  if (!r.vertices.satisfies(Level::Weak)) {
    os << "seeing: n/a (vertices not in weakly convex position)\n";
  } else {
    bool isolated = false;
    for (int v = 0; v < n; ++v) isolated = isolated || d.graph().degree(v) == 0;
    if (isolated || m == 0) {
      os << "seeing: n/a (isolated vertex)\n";
    } else {
      const SeeingProfile p = seeing_profile(d);
      os << "seeing: n0=" << p.n0 << " n1=" << p.n1 << " n2=" << p.n2 << " over=" << p.n_over
         << " good=" << p.good_edges << " unseen=" << p.unseen_edges.size()
         << " degenerate=" << (p.degenerate ? "yes" : "no") << "\n";
      os << "interior edges seen: " << p.seen_interior.size() << "\n";
      os << "doubly exterior: " << p.doubly_exterior << "\n";
      os << "identity m = n1 + 2 n2 - good: "
         << (!p.identity_applies() ? "n/a" : p.identity_holds(m) ? "holds" : "fails") << "\n";
    }
  }
  std::cout << os.str();
  return kOk;
}

// ------------------------------------------------------------ minkowski

int run_minkowski(const std::string& file, const std::string& mode_name, bool oracle) {
  Level mode;
  if (mode_name == "strict") mode = Level::Strict;
  else if (mode_name == "weak") mode = Level::Weak;
  else throw UsageError("--mode must be strict or weak");
  std::istringstream in(slurp(file));
  const PointSet a = make_point_set(read_point_set(in));
  if (a.empty()) throw UsageError("empty point set");
  const PointSet sum = minkowski_sum(a, a);
  const ConvexSubsetResult r = largest_convex_subset(sum, mode);
  std::cout << "points: " << a.size() << "\n";
  std::cout << "sum points: " << sum.size() << "\n";
  std::cout << "mode: " << mode_name << "\n";
  std::cout << "size: " << r.size << "\n";
  std::cout << "method: " << to_string(r.method) << "\n";
  std::cout << "witness:\n";
  for (const Point& p : r.witness) std::cout << "  " << p.x.to_string() << " " << p.y.to_string() << "\n";
  if (oracle) {
    if (sum.size() > 20) {
      std::cout << "oracle: skipped (" << sum.size() << " points, limit 20)\n";
      return kFailed;
    }
    const ConvexSubsetResult b = brute_force_largest(sum, mode);
    std::cout << "oracle: " << b.size << (b.size == r.size ? " (agrees)" : " (DISAGREES)") << "\n";
    if (b.size != r.size) return kFailed;
  }
  return kOk;
}

// ------------------------------------------------------------ search

int run_search(const std::string& file, const std::string& target_code, const SearchConfig& config,
               const std::string& out) {
  Target target;
  try {
    target = parse_target(target_code);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Graph g = parse_graph(slurp(file));
  const SearchOutcome o = find_drawing(g, target, config);
  std::ostringstream summary;
  summary << "target: " << to_string(target) << "\n";
  summary << "restarts used: " << o.restarts_used << "\n";
  summary << "trace:";
  for (double t : o.trace) summary << " " << fmt(t);
  summary << "\n";
  if (o.status == SearchStatus::Certified) {
    summary << "status: certified\n";
    if (target.vertices == Level::Strict && target.midpoints == Level::Strict) {
      summary << "degeneracy: " << degeneracy(g) << "\n";
    }
    (out == "-" ? std::cerr : std::cout) << summary.str();
    emit(out, write_drawing(*o.drawing));
    return kOk;
  }
  summary << "status: failed\n";
  summary << "best penalty: " << fmt(o.best_penalty) << "\n";
  std::cout << summary.str();
  return kFailed;
}

// ------------------------------------------------------------ table

int run_table(const std::string& family, int n_max) {
  if (family != "ln" && family != "bn") throw UsageError("--family must be ln or bn");
  bool all_ok = true;
  std::cout << "n edges expected status\n";
  const bool ln = family == "ln";
  for (int n = ln ? 2 : 3; n <= n_max; n += ln ? 1 : 2) {
    const int expected = ln ? 2 * n - 3 : (3 * (n - 1)) / 2;
    std::string status;
    int edges = -1;
    try {
      const Drawing d = ln ? ln_drawing(n) : bn_drawing(n);
      edges = d.edge_count();
      const ConvexityReport r = classify(d);
      const bool ok = ln ? r.witnesses(Level::Strict, Level::Weak) : r.witnesses(Level::Strict, Level::Strict);
      status = std::string(ok ? "certified" : "FAILED") + " (" + status_name(r.vertices.level) + ", " +
               status_name(r.midpoints.level) + ")";
      if (!ok || edges != expected) all_ok = false;
    } catch (const std::exception& e) {
      status = std::string("FAILED (") + e.what() + ")";
      all_ok = false;
    }
    std::cout << n << " " << edges << " " << expected << " " << status << "\n";
  }
  return all_ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drawings with vertices and edge midpoints in convex position"};
  app.require_subcommand(1);

  std::string name, out = "-", file, mode, target = "ss", family;
  std::vector<int> params;
  bool float_mode = false, oracle = false;
  int n_max = 0;
  SearchConfig config;

  auto* construct = app.add_subcommand("construct", "Emit a construction as a drawing file");
  construct->add_option("name", name, "cycle | complete-weak | k4e | k23 | ln | bn | hk | pk")->required();
  construct->add_option("params", params, "Size parameter");
  construct->add_option("-o,--output", out, "Output file (- for stdout)");
  construct->add_flag("--float", float_mode, "pk only: regular polygon in floating point");

  auto* verify = app.add_subcommand("verify", "Check the distinctness conditions of a drawing");
  verify->add_option("file", file, "Drawing file (- for stdin)")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Convexity statuses, classes and seeing profile");
  classify_cmd->add_option("file", file, "Drawing file (- for stdin)")->required();

  auto* mink = app.add_subcommand("minkowski", "Largest convex subset of A+A");
  mink->add_option("--self", file, "Point-set file A (- for stdin)")->required();
  mink->add_option("--mode", mode, "strict | weak")->required();
  mink->add_flag("--oracle", oracle, "Cross-check against exhaustive search");

  auto* search = app.add_subcommand("search", "Look for a drawing of a graph by numerical search");
  search->add_option("--graph", file, "Graph file (- for stdin)")->required();
  search->add_option("--target", target, "Vertex and midpoint level: ss | sw | ws | ww | as | aw")->required();
  search->add_option("--seed", config.seed, "Random seed")->required();
  search->add_option("--restarts", config.restarts, "Number of restarts")->check(CLI::PositiveNumber);
  search->add_option("--iterations", config.iterations, "Iterations per restart")->check(CLI::PositiveNumber);
  search->add_option("-o,--output", out, "Output file for a certified drawing (- for stdout)");

  auto* table = app.add_subcommand("table", "Edge counts and certification of a family");
  table->add_option("--family", family, "ln | bn")->required();
  table->add_option("--n-max", n_max, "Largest n")->required();

  auto* svg = app.add_subcommand("svg", "Render a drawing as SVG");
  svg->add_option("file", file, "Drawing file (- for stdin)")->required();
  svg->add_option("-o,--output", out, "Output file (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return run_construct(name, params, float_mode, out);
    if (*verify) return run_verify(file);
    if (*classify_cmd) return run_classify(file);
    if (*mink) return run_minkowski(file, mode, oracle);
    if (*search) return run_search(file, target, config, out);
    if (*table) return run_table(family, n_max);
    if (*svg) {
      emit(out, render_svg(parse_drawing(slurp(file))));
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
