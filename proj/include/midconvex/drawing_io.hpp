#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "midconvex/drawing.hpp"

namespace midconvex {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Drawing text format:
//   vertices <n>
//   <id> <x> <y>        (n lines, scalar syntax, ids 0..n-1 each once)
//   edges <m>
//   <u> <v>             (m lines, written with u < v)
// `#` starts a comment; blank lines are ignored. write(read(write(d))) is
// byte-identical to write(d).
std::string write_drawing(const Drawing& d);
Drawing read_drawing(std::istream& in);
Drawing parse_drawing(std::string_view text);

// Graph text format: the drawing format without coordinates. Vertex lines
// (`<id>` alone, or a full drawing line whose coordinates are ignored) are
// optional.
std::string write_graph(const Graph& g);
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Point-set format: `points <N>` followed by N lines `<x> <y>`.
std::string write_point_set(const std::vector<Point>& points);
std::vector<Point> read_point_set(std::istream& in);

}  // namespace midconvex
