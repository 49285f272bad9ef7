#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "klb/graph.hpp"
#include "klb/io/text.hpp"

namespace klb::io {

/// PACE .gr: "p tw n m" followed by m edge lines "u v"; 'c' lines are comments.
inline Graph parse_gr(std::string_view text) {
  const auto lines = tokenize(text, 'c');
  if (lines.empty())
    throw ParseError(1, "missing 'p tw' header");
  const Line &head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "p" || head.tokens[1] != "tw")
    throw ParseError(head.number, "expected 'p tw <vertices> <edges>'");
  const int n = parse_small_int(head.tokens[2], head.number);
  const long long m = parse_int(head.tokens[3], head.number);
  if (n < 0 || m < 0)
    throw ParseError(head.number, "negative count in header");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line &line = lines[i];
    if (line.tokens.size() != 2)
      throw ParseError(line.number, "expected an edge 'u v'");
    const int u = parse_small_int(line.tokens[0], line.number);
    const int v = parse_small_int(line.tokens[1], line.number);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line.number, "edge endpoint out of range");
    if (u == v)
      throw ParseError(line.number, "self-loop");
    edges.emplace_back(u, v);
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(head.number, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

inline std::string serialize_gr(const Graph &g) {
  std::ostringstream os;
  os << "p tw " << g.num_vertices() << ' ' << g.edges().size() << '\n';
  for (auto [u, v] : g.edges())
    os << u << ' ' << v << '\n';
  return os.str();
}

/// A PACE .td file: the decomposition plus the vertex count of its graph.
struct PaceTd {
  TreeDecomposition decomposition;
  int num_vertices = 0;
  friend bool operator==(const PaceTd &, const PaceTd &) = default;
};

/// PACE .td: "s td N maxbag n", one "b i v..." line per node, then tree edges "p q".
inline PaceTd parse_td(std::string_view text) {
  const auto lines = tokenize(text, 'c');
  if (lines.empty())
    throw ParseError(1, "missing 's td' header");
  const Line &head = lines.front();
  if (head.tokens.size() != 5 || head.tokens[0] != "s" || head.tokens[1] != "td")
    throw ParseError(head.number, "expected 's td <bags> <max bag size> <vertices>'");
  const int nodes = parse_small_int(head.tokens[2], head.number);
  const int max_bag = parse_small_int(head.tokens[3], head.number);
  const int n = parse_small_int(head.tokens[4], head.number);
  if (nodes < 0 || max_bag < 0 || n < 0)
    throw ParseError(head.number, "negative count in header");

  std::vector<std::vector<int>> bags(static_cast<std::size_t>(nodes));
  std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line &line = lines[i];
    if (line.tokens[0] == "b") {
      if (line.tokens.size() < 2)
        throw ParseError(line.number, "bag line needs a node id");
      const int id = parse_small_int(line.tokens[1], line.number);
      if (id < 1 || id > nodes)
        throw ParseError(line.number, "bag id out of range");
      if (seen[static_cast<std::size_t>(id - 1)])
        throw ParseError(line.number, "bag " + std::to_string(id) + " given twice");
      seen[static_cast<std::size_t>(id - 1)] = true;
      auto &bag = bags[static_cast<std::size_t>(id - 1)];
      for (std::size_t j = 2; j < line.tokens.size(); ++j) {
        const int v = parse_small_int(line.tokens[j], line.number);
        if (v < 1 || v > n)
          throw ParseError(line.number, "bag vertex out of range");
        bag.push_back(v);
      }
      continue;
    }
    if (line.tokens.size() != 2)
      throw ParseError(line.number, "expected a bag line or a tree edge 'p q'");
    const int p = parse_small_int(line.tokens[0], line.number);
    const int q = parse_small_int(line.tokens[1], line.number);
    if (p < 1 || p > nodes || q < 1 || q > nodes || p == q)
      throw ParseError(line.number, "tree edge endpoint out of range");
    edges.emplace_back(p, q);
  }
  for (int i = 0; i < nodes; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw ParseError(head.number, "bag " + std::to_string(i + 1) + " missing");
  PaceTd out{TreeDecomposition(std::move(bags), std::move(edges)), n};
  if (out.decomposition.width() + 1 != max_bag)
    throw ParseError(head.number, "header declares max bag size " + std::to_string(max_bag) +
                                      ", bags have " +
                                      std::to_string(out.decomposition.width() + 1));
  return out;
}

inline std::string serialize_td(const TreeDecomposition &td, int num_vertices) {
  std::ostringstream os;
  os << "s td " << td.num_nodes() << ' ' << td.width() + 1 << ' ' << num_vertices << '\n';
  for (int i = 1; i <= td.num_nodes(); ++i) {
    os << "b " << i;
    for (int v : td.bag(i))
      os << ' ' << v;
    os << '\n';
  }
  for (auto [p, q] : td.tree_edges())
    os << p << ' ' << q << '\n';
  return os.str();
}

inline std::string serialize_td(const PaceTd &td) { return serialize_td(td.decomposition, td.num_vertices); }

} // namespace klb::io
