#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "berge/error.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

namespace detail {

// Splits a line into integers; throws InvalidInput on anything else.
inline std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InvalidInput("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// Non-empty lines not starting with '#', paired with their line numbers.
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

inline std::ifstream open_for_reading(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

/// Reads the .hyg format: a header line "n r", then one edge per line as r
/// vertex ids; '#' lines are comments; duplicate edges are rejected.
inline Hypergraph read_hyg(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InvalidInput("hyg: missing 'n r' header");
  const auto head = detail::parse_ints(lines[0].second, lines[0].first);
  if (head.size() != 2) throw InvalidInput("hyg: header must be 'n r'");
  const int n = int(head[0]), r = int(head[1]);
  if (n < 1 || r < 2) throw InvalidInput("hyg: need n >= 1 and r >= 2");
  if (n > kMaxVertices) throw BudgetError("hyg: n above 64 is not supported");
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto vals = detail::parse_ints(lines[i].second, lines[i].first);
    if (int(vals.size()) != r)
      throw InvalidInput("hyg line " + std::to_string(lines[i].first) + ": expected " + std::to_string(r) + " vertices");
    std::vector<Vertex> e;
    for (long long v : vals) {
      if (v < 1 || v > n) throw InvalidInput("hyg line " + std::to_string(lines[i].first) + ": vertex out of range");
      e.push_back(Vertex(v));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_lists(n, r, edges);
}

inline Hypergraph read_hyg_file(const std::string& path) {
  auto in = detail::open_for_reading(path);
  return read_hyg(in);
}

/// Writes the .hyg format with edges in lexicographic order.
inline std::string write_hyg(const Hypergraph& h, const std::string& comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << h.order() << ' ' << h.uniformity() << '\n';
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (Vertex v : e.vertices()) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

/// Reads the .elg format: a line "n", then one "u v" pair per line.
inline SimpleGraph read_elg(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InvalidInput("elg: missing vertex count");
  const auto head = detail::parse_ints(lines[0].second, lines[0].first);
  if (head.size() != 1 || head[0] < 1) throw InvalidInput("elg: first line must be n >= 1");
  if (head[0] > kMaxVertices) throw BudgetError("elg: n above 64 is not supported");
  SimpleGraph g(static_cast<int>(head[0]));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto vals = detail::parse_ints(lines[i].second, lines[i].first);
    if (vals.size() != 2) throw InvalidInput("elg line " + std::to_string(lines[i].first) + ": expected 'u v'");
    if (vals[0] < 1 || vals[0] > g.order() || vals[1] < 1 || vals[1] > g.order())
      throw InvalidInput("elg line " + std::to_string(lines[i].first) + ": vertex out of range");
    const Vertex u = Vertex(vals[0]), v = Vertex(vals[1]);
    if (u == v) throw InvalidInput("elg line " + std::to_string(lines[i].first) + ": self-loop");
    if (g.has_edge(u, v)) throw InvalidInput("elg line " + std::to_string(lines[i].first) + ": duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

inline SimpleGraph read_elg_file(const std::string& path) {
  auto in = detail::open_for_reading(path);
  return read_elg(in);
}

inline std::string write_elg(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (ShadowPair p : g.edges()) out << p.u << ' ' << p.v << '\n';
  return out.str();
}

}  // namespace berge
