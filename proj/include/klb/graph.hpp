#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "klb/error.hpp"

namespace klb {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n. Edges are stored normalized
/// (smaller endpoint first), sorted and deduplicated.
class Graph {
public:
  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges, std::vector<std::string> labels = {})
      : n_(num_vertices), labels_(std::move(labels)) {
    if (n_ < 0)
      throw InvalidInput("negative vertex count");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
      throw InvalidInput("label count does not match vertex count");
    for (auto [u, v] : edges) {
      if (u < 1 || v < 1 || u > n_ || v > n_)
        throw InvalidInput("edge endpoint out of range");
      if (u == v)
        throw InvalidInput("self-loop on vertex " + std::to_string(u));
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  int num_vertices() const noexcept { return n_; }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  const std::vector<std::string> &labels() const noexcept { return labels_; }

  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(static_cast<std::size_t>(v - 1));
  }

  bool has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(u, v), std::max(u, v)});
  }

  /// Adjacency lists indexed by vertex (index 0 unused).
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
    for (auto [u, v] : edges_) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  /// Induced subgraph after deleting `removed`; surviving vertices keep their
  /// relative order and are renumbered densely.
  Graph without(const std::set<int> &removed) const {
    std::vector<int> remap(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<std::string> labels;
    int next = 0;
    for (int v = 1; v <= n_; ++v) {
      if (removed.count(v))
        continue;
      remap[static_cast<std::size_t>(v)] = ++next;
      if (!labels_.empty())
        labels.push_back(label(v));
    }
    std::vector<Edge> es;
    for (auto [u, v] : edges_) {
      int a = remap[static_cast<std::size_t>(u)], b = remap[static_cast<std::size_t>(v)];
      if (a && b)
        es.emplace_back(a, b);
    }
    return Graph(next, std::move(es), std::move(labels));
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

namespace detail {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

} // namespace detail

/// True iff the graph has no cycle.
inline bool is_forest(const Graph &g) {
  detail::DisjointSets ds(static_cast<std::size_t>(g.num_vertices()) + 1);
  for (auto [u, v] : g.edges())
    if (!ds.unite(u, v))
      return false;
  return true;
}

inline int count_components(const Graph &g) {
  detail::DisjointSets ds(static_cast<std::size_t>(g.num_vertices()) + 1);
  int comps = g.num_vertices();
  for (auto [u, v] : g.edges())
    if (ds.unite(u, v))
      --comps;
  return comps;
}

/// Tree decomposition: nodes 1..N with a bag each, plus tree edges between
/// nodes. Bags are sorted and deduplicated. Whether the edges actually form a
/// tree and cover a graph is checked by verify::check_tree_decomposition.
class TreeDecomposition {
public:
  TreeDecomposition() = default;
  TreeDecomposition(std::vector<std::vector<int>> bags, std::vector<Edge> tree_edges)
      : bags_(std::move(bags)) {
    for (auto &b : bags_) {
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      if (!b.empty() && b.front() < 1)
        throw InvalidInput("bag vertex must be positive");
    }
    int n = num_nodes();
    for (auto [p, q] : tree_edges) {
      if (p < 1 || q < 1 || p > n || q > n)
        throw InvalidInput("tree edge endpoint out of range");
      if (p == q)
        throw InvalidInput("tree edge is a self-loop");
      edges_.emplace_back(std::min(p, q), std::max(p, q));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  int num_nodes() const noexcept { return static_cast<int>(bags_.size()); }
  const std::vector<std::vector<int>> &bags() const noexcept { return bags_; }
  const std::vector<int> &bag(int node) const { return bags_.at(static_cast<std::size_t>(node - 1)); }
  const std::vector<Edge> &tree_edges() const noexcept { return edges_; }

  /// Largest bag size minus one; -1 for a decomposition without nodes.
  int width() const {
    int w = -1;
    for (const auto &b : bags_)
      w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }

  /// Largest vertex mentioned in any bag (0 if none).
  int max_vertex() const {
    int m = 0;
    for (const auto &b : bags_)
      if (!b.empty())
        m = std::max(m, b.back());
    return m;
  }

  /// The tree as a graph on its nodes.
  Graph tree() const { return Graph(num_nodes(), edges_); }

  friend bool operator==(const TreeDecomposition &, const TreeDecomposition &) = default;

private:
  std::vector<std::vector<int>> bags_;
  std::vector<Edge> edges_;
};

/// Decomposition obtained by eliminating vertices in the given order (every
/// vertex exactly once). Components are chained into a single tree.
inline TreeDecomposition decomposition_from_elimination(const Graph &g,
                                                       const std::vector<int> &order) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (order.size() != n)
    throw InvalidInput("elimination order must list every vertex once");
  std::vector<int> position(n + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || position[static_cast<std::size_t>(v)] != -1)
      throw InvalidInput("elimination order must list every vertex once");
    position[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::set<int>> nbrs(n + 1);
  for (auto [u, v] : g.edges()) {
    nbrs[static_cast<std::size_t>(u)].insert(v);
    nbrs[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<std::vector<int>> bags;
  std::vector<int> node_of(n + 1, 0);
  std::vector<int> attach_to(n, -1); // by elimination index
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    std::vector<int> later;
    for (int u : nbrs[static_cast<std::size_t>(v)])
      if (position[static_cast<std::size_t>(u)] > static_cast<int>(i))
        later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        nbrs[static_cast<std::size_t>(later[a])].insert(later[b]);
        nbrs[static_cast<std::size_t>(later[b])].insert(later[a]);
      }
    int first_later = -1;
    for (int u : later)
      if (first_later == -1 || position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(first_later)])
        first_later = u;
    std::vector<int> bag = later;
    bag.push_back(v);
    bags.push_back(std::move(bag));
    node_of[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    attach_to[i] = first_later;
  }
  std::vector<Edge> tree_edges;
  int previous_root = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int node = static_cast<int>(i) + 1;
    if (attach_to[i] != -1) {
      tree_edges.emplace_back(node, node_of[static_cast<std::size_t>(attach_to[i])]);
    } else {
      if (previous_root)
        tree_edges.emplace_back(previous_root, node);
      previous_root = node;
    }
  }
  return TreeDecomposition(std::move(bags), std::move(tree_edges));
}

/// Greedy minimum-degree elimination order (ties broken by smallest vertex).
inline std::vector<int> min_degree_order(const Graph &g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::set<int>> nbrs(n + 1);
  for (auto [u, v] : g.edges()) {
    nbrs[static_cast<std::size_t>(u)].insert(v);
    nbrs[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<bool> done(n + 1, false);
  std::vector<int> order;
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 1; v <= n; ++v)
      if (!done[v] && (best == -1 || nbrs[v].size() < nbrs[static_cast<std::size_t>(best)].size()))
        best = static_cast<int>(v);
    auto &nb = nbrs[static_cast<std::size_t>(best)];
    for (int a : nb)
      for (int b : nb)
        if (a != b)
          nbrs[static_cast<std::size_t>(a)].insert(b);
    for (int a : nb)
      nbrs[static_cast<std::size_t>(a)].erase(best);
    nb.clear();
    done[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }
  return order;
}

} // namespace klb
