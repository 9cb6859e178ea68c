#include "midconvex/drawing_io.hpp"

#include <sstream>

namespace midconvex {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line with at least one token, or false at end of input.
  bool next(Line& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(std::move(t));
      if (tokens.empty()) continue;
      out = {number_, std::move(tokens)};
      return true;
    }
    return false;
  }

  Line expect(const char* what) {
    Line l;
    if (!next(l)) throw ParseError(number_, std::string("unexpected end of input, expected ") + what);
    return l;
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

int parse_count(const Line& l, const char* keyword) {
  if (l.tokens.size() != 2 || l.tokens[0] != keyword) {
    throw ParseError(l.number, std::string("expected '") + keyword + " <count>'");
  }
  try {
    std::size_t used = 0;
    int n = std::stoi(l.tokens[1], &used);
    if (used != l.tokens[1].size() || n < 0) throw std::invalid_argument("count");
    return n;
  } catch (const std::exception&) {
    throw ParseError(l.number, "bad count '" + l.tokens[1] + "'");
  }
}

int parse_int(const Line& l, const std::string& token) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("int");
    return v;
  } catch (const std::exception&) {
    throw ParseError(l.number, "bad integer '" + token + "'");
  }
}

Scalar parse_scalar(const Line& l, const std::string& token) {
  try {
    return Scalar::parse(token);
  } catch (const std::exception& e) {
    throw ParseError(l.number, e.what());
  }
}

std::vector<Edge> read_edges(LineReader& reader, int n, Line header) {
  int m = parse_count(header, "edges");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    Line l = reader.expect("an edge line");
    if (l.tokens.size() != 2) throw ParseError(l.number, "edge line needs '<u> <v>'");
    int u = parse_int(l, l.tokens[0]);
    int v = parse_int(l, l.tokens[1]);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError(l.number, "edge endpoints out of range or equal");
    }
    edges.emplace_back(u, v);
  }
  Line extra;
  if (reader.next(extra)) throw ParseError(extra.number, "trailing content after edge list");
  return edges;
}

Graph build_graph(int n, const std::vector<Edge>& edges, int line) {
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

std::string write_drawing(const Drawing& d) {
  std::string out = "vertices " + std::to_string(d.vertex_count()) + "\n";
  for (int v = 0; v < d.vertex_count(); ++v) {
    out += std::to_string(v) + " " + d.position(v).x.to_string() + " " + d.position(v).y.to_string() + "\n";
  }
  out += "edges " + std::to_string(d.edge_count()) + "\n";
  for (const Edge& e : d.graph().edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Drawing read_drawing(std::istream& in) {
  LineReader reader(in);
  int n = parse_count(reader.expect("'vertices <n>'"), "vertices");
  std::vector<Point> positions(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    Line l = reader.expect("a vertex line");
    if (l.tokens.size() != 3) throw ParseError(l.number, "vertex line needs '<id> <x> <y>'");
    int id = parse_int(l, l.tokens[0]);
    if (id < 0 || id >= n || seen[id]) throw ParseError(l.number, "vertex id out of range or repeated");
    seen[id] = true;
    positions[id] = {parse_scalar(l, l.tokens[1]), parse_scalar(l, l.tokens[2])};
  }
  Line header = reader.expect("'edges <m>'");
  std::vector<Edge> edges = read_edges(reader, n, header);
  try {
    return Drawing(build_graph(n, edges, header.number), std::move(positions));
  } catch (const FieldMismatch& e) {
    throw ParseError(header.number, e.what());
  }
}

Drawing parse_drawing(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_drawing(in);
}

std::string write_graph(const Graph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  out += "edges " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  int n = parse_count(reader.expect("'vertices <n>'"), "vertices");
  Line l = reader.expect("'edges <m>'");
  while (l.tokens[0] != "edges") {
    if (l.tokens.size() != 1 && l.tokens.size() != 3) throw ParseError(l.number, "unexpected vertex line");
    int id = parse_int(l, l.tokens[0]);
    if (id < 0 || id >= n) throw ParseError(l.number, "vertex id out of range");
    l = reader.expect("'edges <m>'");
  }
  std::vector<Edge> edges = read_edges(reader, n, l);
  return build_graph(n, edges, l.number);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

std::string write_point_set(const std::vector<Point>& points) {
  std::string out = "points " + std::to_string(points.size()) + "\n";
  for (const Point& p : points) out += p.x.to_string() + " " + p.y.to_string() + "\n";
  return out;
}

std::vector<Point> read_point_set(std::istream& in) {
  LineReader reader(in);
  int n = parse_count(reader.expect("'points <N>'"), "points");
  std::vector<Point> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Line l = reader.expect("a point line");
    if (l.tokens.size() != 2) throw ParseError(l.number, "point line needs '<x> <y>'");
    out.push_back({parse_scalar(l, l.tokens[0]), parse_scalar(l, l.tokens[1])});
  }
  Line extra;
  if (reader.next(extra)) throw ParseError(extra.number, "trailing content after point list");
  return out;
}

}  // namespace midconvex
