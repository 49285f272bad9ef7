#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "klb/bayes_net.hpp"
#include "klb/caps.hpp"
#include "klb/csp.hpp"
#include "klb/error.hpp"
#include "klb/graph.hpp"
#include "klb/solvers/csp.hpp"
#include "klb/solvers/sat.hpp"
#include "klb/verify/structure.hpp"

namespace klb {

/// Pr(query = true) > 0? Searches complete instantiations in topological
/// order and abandons a branch as soon as one factor of the product is zero.
inline bool bn_positive_brute(const BayesNet &bn, int query, const OracleCaps &caps = {}) {
  if (query < 1 || query > bn.num_nodes())
    throw InvalidInput("query node out of range");
  if (bn.num_nodes() > caps.bn_nodes)
    throw CapExceeded("bn_positive_brute: " + std::to_string(bn.num_nodes()) +
                      " nodes exceed cap " + std::to_string(caps.bn_nodes));
  const auto order = bn.topological_order();
  std::vector<bool> value(static_cast<std::size_t>(bn.num_nodes()) + 1, false);
  std::vector<bool> pv;
  auto search = [&](auto &&self, std::size_t i) -> bool {
    if (i == order.size())
      return true;
    const int v = order[i];
    for (bool b : {true, false}) {
      if (v == query && !b)
        continue;
      pv.clear();
      for (int p : bn.parents(v))
        pv.push_back(value[static_cast<std::size_t>(p)]);
      if (bn.factor(v, b, pv) == Rational(0))
        continue;
      value[static_cast<std::size_t>(v)] = b;
      if (self(self, i + 1))
        return true;
    }
    return false;
  };
  return search(search, 0);
}

/// Constraint network over U={0,1} whose solutions are exactly the complete
/// instantiations with positive probability: one constraint per family
/// listing the (parents..., child) tuples with a nonzero factor.
inline ConstraintNetwork positivity_network(const BayesNet &bn) {
  std::vector<Constraint> cons;
  for (int v = 1; v <= bn.num_nodes(); ++v) {
    const auto &ps = bn.parents(v);
    std::vector<int> scope = ps;
    scope.push_back(v);
    std::vector<Tuple> rel;
    const std::size_t rows = std::size_t{1} << ps.size();
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational p_true = bn.table(v)[r];
      Tuple t;
      for (std::size_t j = 0; j < ps.size(); ++j)
        t.push_back(static_cast<int>((r >> (ps.size() - 1 - j)) & 1u));
      t.push_back(1);
      if (p_true > Rational(0))
        rel.push_back(t);
      t.back() = 0;
      if (p_true < Rational(1))
        rel.push_back(t);
    }
    cons.emplace_back(std::move(scope), std::move(rel));
  }
  return ConstraintNetwork(bn.num_nodes(), {0, 1}, std::move(cons));
}

/// Decomposition of the moral graph with every cutset node in every bag.
///
/// When each cutset node has at most one parent outside the cutset, bags are
/// the families {v} + parents(v) + S and tree edges follow the arcs of the
/// forest left after deleting S. Otherwise a cutset node's family would tie
/// distant parts of that forest together, and the bags come from a
/// min-degree elimination of the moral graph restricted to non-cutset nodes.
inline TreeDecomposition cutset_decomposition(const BayesNet &bn, const std::vector<int> &cutset) {
  const int n = bn.num_nodes();
  std::set<int> s(cutset.begin(), cutset.end());
  auto in_s = [&](int v) { return s.count(v) > 0; };
  auto with_cutset = [&](std::vector<int> bag) {
    bag.insert(bag.end(), s.begin(), s.end());
    return bag;
  };

  bool families_fit = true;
  for (int v : s) {
    const auto &ps = bn.parents(v);
    if (std::count_if(ps.begin(), ps.end(), [&](int p) { return !in_s(p); }) > 1)
      families_fit = false;
  }

  if (!families_fit) {
    const Graph rest = moral_graph(bn).without(s);
    std::vector<int> back; // renumbered vertex -> node
    for (int v = 1; v <= n; ++v)
      if (!in_s(v))
        back.push_back(v);
    TreeDecomposition td = decomposition_from_elimination(rest, min_degree_order(rest));
    std::vector<std::vector<int>> bags;
    for (const auto &b : td.bags()) {
      std::vector<int> mapped;
      for (int x : b)
        mapped.push_back(back[static_cast<std::size_t>(x - 1)]);
      bags.push_back(with_cutset(std::move(mapped)));
    }
    if (bags.empty())
      bags.push_back(with_cutset({}));
    return TreeDecomposition(std::move(bags), td.tree_edges());
  }

  std::vector<std::vector<int>> bags;
  for (int v = 1; v <= n; ++v) {
    std::vector<int> fam = bn.parents(v);
    fam.push_back(v);
    bags.push_back(with_cutset(std::move(fam)));
  }
  if (bags.empty())
    return {};
  std::vector<Edge> edges;
  detail::DisjointSets ds(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v)
    for (int p : bn.parents(v))
      if (!in_s(p)) {
        edges.emplace_back(p, v);
        ds.unite(p, v);
      }
  // Join the remaining components into one tree.
  int previous = 0;
  for (int v = 1; v <= n; ++v) {
    if (ds.find(v) != v)
      continue;
    if (previous)
      edges.emplace_back(previous, v);
    previous = v;
  }
  return TreeDecomposition(std::move(bags), std::move(edges));
}

/// Pr(query = true) > 0 by conditioning on the loop cutset: for each of the
/// 2^|S| instantiations of S, the positivity network with S and the query
/// pinned is decided by csp dynamic programming over cutset_decomposition.
inline bool bn_positive_cutset(const BayesNet &bn, int query, const std::vector<int> &cutset) {
  if (query < 1 || query > bn.num_nodes())
    throw InvalidInput("query node out of range");
  if (!verify::check_loop_cutset(bn, cutset).passed())
    throw InvalidInput("not a loop cutset");
  std::vector<int> s(cutset.begin(), cutset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  const ConstraintNetwork net = positivity_network(bn);
  const TreeDecomposition td = cutset_decomposition(bn, s);
  detail::JoinTreeDp dp(net, td);
  auto base = dp.initial_domains();
  auto &q = base[static_cast<std::size_t>(query)];
  q.erase(std::remove(q.begin(), q.end(), 0), q.end());

  bool positive = false;
  for_each_assignment(s, [&](const PartialAssignment &tau) {
    auto dom = base;
    for (const auto &[v, b] : tau) {
      auto &d = dom[static_cast<std::size_t>(v)];
      d.erase(std::remove(d.begin(), d.end(), b ? 0 : 1), d.end());
    }
    positive = dp.decide(dom);
    return !positive;
  });
  return positive;
}

} // namespace klb
