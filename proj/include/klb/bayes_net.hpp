#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "klb/error.hpp"
#include "klb/graph.hpp"

namespace klb {

using Rational = boost::rational<std::int64_t>;

/// Boolean Bayesian network over nodes 1..n.
///
/// The table of a node with parents (p_0, ..., p_{s-1}) has 2^s rows giving
/// Pr(node = true | parents). Row r corresponds to the instantiation where
/// parent p_j takes the value of bit (s-1-j) of r, so the row's bit string
/// written in parent order reads as r in binary.
class BayesNet {
public:
  BayesNet() = default;
  BayesNet(std::vector<std::string> names, std::vector<std::vector<int>> parents,
           std::vector<std::vector<Rational>> tables)
      : names_(std::move(names)), parents_(std::move(parents)), tables_(std::move(tables)) {
    const auto n = names_.size();
    if (parents_.size() != n || tables_.size() != n)
      throw InvalidInput("every node needs a parent list and a table");
    for (std::size_t v = 0; v < n; ++v) {
      std::set<int> seen;
      for (int p : parents_[v]) {
        if (p < 1 || static_cast<std::size_t>(p) > n)
          throw InvalidInput("node " + names_[v] + ": unknown parent " + std::to_string(p));
        if (static_cast<std::size_t>(p) == v + 1)
          throw InvalidInput("node " + names_[v] + " is its own parent");
        if (!seen.insert(p).second)
          throw InvalidInput("node " + names_[v] + ": repeated parent");
      }
      if (parents_[v].size() > 20)
        throw InvalidInput("node " + names_[v] + ": too many parents for an explicit table");
      if (tables_[v].size() != (std::size_t{1} << parents_[v].size()))
        throw InvalidInput("node " + names_[v] + ": table must have 2^s rows");
      for (const Rational &q : tables_[v])
        if (q < Rational(0) || q > Rational(1))
          throw InvalidInput("node " + names_[v] + ": probability outside [0,1]");
    }
    if (topological_order().size() != n)
      throw InvalidInput("parent relation has a cycle");
  }

  int num_nodes() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  const std::string &name(int v) const { return names_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int> &parents(int v) const { return parents_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<Rational> &table(int v) const { return tables_.at(static_cast<std::size_t>(v - 1)); }

  /// Row index for the given parent values (in parent order).
  static std::size_t row_index(const std::vector<bool> &parent_values) {
    std::size_t r = 0;
    for (bool b : parent_values)
      r = (r << 1) | (b ? 1u : 0u);
    return r;
  }

  /// T_{v|U}: probability of node `v` taking `value` given its parents' values.
  Rational factor(int v, bool value, const std::vector<bool> &parent_values) const {
    Rational p_true = table(v).at(row_index(parent_values));
    return value ? p_true : Rational(1) - p_true;
  }

  /// Nodes ordered so that parents precede children; ties by smallest id.
  std::vector<int> topological_order() const {
    const auto n = names_.size();
    std::vector<int> indeg(n + 1, 0);
    std::vector<std::vector<int>> children(n + 1);
    for (std::size_t v = 1; v <= n; ++v)
      for (int p : parents_[v - 1]) {
        children[static_cast<std::size_t>(p)].push_back(static_cast<int>(v));
        ++indeg[v];
      }
    std::set<int> ready;
    for (std::size_t v = 1; v <= n; ++v)
      if (indeg[v] == 0)
        ready.insert(static_cast<int>(v));
    std::vector<int> order;
    while (!ready.empty()) {
      int v = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(v);
      for (int c : children[static_cast<std::size_t>(v)])
        if (--indeg[static_cast<std::size_t>(c)] == 0)
          ready.insert(c);
    }
    return order;
  }

  int find(const std::string &name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name)
        return static_cast<int>(i) + 1;
    throw InvalidInput("unknown node '" + name + "'");
  }

  friend bool operator==(const BayesNet &, const BayesNet &) = default;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<Rational>> tables_;
};

/// A network together with the node whose positivity is asked.
struct BnQuery {
  BayesNet net;
  int query = 0;
  friend bool operator==(const BnQuery &, const BnQuery &) = default;
};

/// Underlying undirected simple graph of the DAG.
inline Graph skeleton(const BayesNet &bn) {
  std::vector<Edge> edges;
  for (int v = 1; v <= bn.num_nodes(); ++v)
    for (int p : bn.parents(v))
      edges.emplace_back(p, v);
  return Graph(bn.num_nodes(), std::move(edges), bn.names());
}

/// Parent-child edges plus edges between co-parents of a common child.
inline Graph moral_graph(const BayesNet &bn) {
  std::vector<Edge> edges;
  for (int v = 1; v <= bn.num_nodes(); ++v) {
    const auto &ps = bn.parents(v);
    for (std::size_t a = 0; a < ps.size(); ++a) {
      edges.emplace_back(ps[a], v);
      for (std::size_t b = a + 1; b < ps.size(); ++b)
        edges.emplace_back(ps[a], ps[b]);
    }
  }
  return Graph(bn.num_nodes(), std::move(edges), bn.names());
}

} // namespace klb
