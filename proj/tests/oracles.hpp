#pragma once

// Reference implementations used only by the tests. They share the instance
// types with the library but none of its algorithms: everything here is
// written the slow, obvious way.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "klb/bayes_net.hpp"
#include "klb/cnf.hpp"
#include "klb/csp.hpp"
#include "klb/global_constraint.hpp"
#include "klb/graph.hpp"
#include "klb/logic_program.hpp"

namespace ref {

using namespace klb;

inline bool clause_true(const Clause &c, const std::vector<bool> &a) {
  for (Lit l : c)
    if (a[static_cast<std::size_t>(l.var())] == l.positive())
      return true;
  return false;
}

/// Every assignment, 1-indexed vectors.
inline bool sat(const CnfFormula &f) {
  const int n = f.num_vars();
  std::vector<bool> a(static_cast<std::size_t>(n) + 1, false);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (int v = 1; v <= n; ++v)
      a[static_cast<std::size_t>(v)] = (code >> (v - 1)) & 1u;
    bool ok = true;
    for (const Clause &c : f.clauses())
      if (!clause_true(c, a)) {
        ok = false;
        break;
      }
    if (ok)
      return true;
  }
  return false;
}

/// Plain DPLL with unit propagation, for formulas too wide to enumerate.
inline bool dpll(std::vector<std::vector<int>> clauses) {
  while (true) {
    bool unit_found = false;
    for (const auto &c : clauses) {
      if (c.empty())
        return false;
      if (c.size() == 1) {
        const int l = c[0];
        std::vector<std::vector<int>> next;
        for (const auto &d : clauses) {
          if (std::find(d.begin(), d.end(), l) != d.end())
            continue;
          std::vector<int> e;
          for (int x : d)
            if (x != -l)
              e.push_back(x);
          next.push_back(std::move(e));
        }
        clauses = std::move(next);
        unit_found = true;
        break;
      }
    }
    if (!unit_found)
      break;
  }
  if (clauses.empty())
    return true;
  const int branch = clauses.front().front();
  for (int l : {branch, -branch}) {
    auto copy = clauses;
    copy.push_back({l});
    if (dpll(std::move(copy)))
      return true;
  }
  return false;
}

inline bool dpll(const CnfFormula &f) {
  std::vector<std::vector<int>> cs;
  for (const Clause &c : f.clauses()) {
    std::vector<int> d;
    for (Lit l : c)
      d.push_back(l.dimacs());
    cs.push_back(std::move(d));
  }
  return dpll(std::move(cs));
}

/// All solutions of a network, each indexed by variable - 1.
inline std::vector<std::vector<int>> csp_solutions(const ConstraintNetwork &net) {
  std::vector<std::vector<int>> sols;
  const auto &u = net.universe();
  std::vector<int> idx(static_cast<std::size_t>(net.num_vars()), 0);
  while (true) {
    std::vector<int> vals;
    for (int i : idx)
      vals.push_back(u[static_cast<std::size_t>(i)]);
    bool ok = true;
    for (const Constraint &c : net.constraints()) {
      Tuple t;
      for (int v : c.scope)
        t.push_back(vals[static_cast<std::size_t>(v - 1)]);
      if (std::find(c.relation.begin(), c.relation.end(), t) == c.relation.end()) {
        ok = false;
        break;
      }
    }
    if (ok)
      sols.push_back(vals);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == static_cast<int>(u.size()))
      idx[pos++] = 0;
    if (pos == idx.size())
      break;
  }
  return sols;
}

inline bool csp(const ConstraintNetwork &net) { return !csp_solutions(net).empty(); }

inline bool global_legal(const GlobalConstraint &g, const std::vector<int> &val) {
  auto at = [&](int v) { return val[static_cast<std::size_t>(v - 1)]; };
  switch (g.kind()) {
  case GlobalKind::NValue: {
    std::vector<int> seen;
    for (int v : g.x())
      if (std::find(seen.begin(), seen.end(), at(v)) == seen.end())
        seen.push_back(at(v));
    return static_cast<int>(seen.size()) == g.n_value();
  }
  case GlobalKind::Disjoint:
    for (int a : g.x())
      for (int b : g.y())
        if (at(a) == at(b))
          return false;
    return true;
  case GlobalKind::Uses:
    for (int a : g.x()) {
      bool found = false;
      for (int b : g.y())
        found = found || at(a) == at(b);
      if (!found)
        return false;
    }
    return true;
  }
  return false;
}

inline bool global(const GlobalConstraint &g) {
  const int n = g.num_vars();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> val;
    for (int v = 1; v <= n; ++v)
      val.push_back(g.domain(v)[idx[static_cast<std::size_t>(v - 1)]]);
    if (global_legal(g, val))
      return true;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == g.domain(static_cast<int>(pos) + 1).size())
      idx[pos++] = 0;
    if (pos == idx.size())
      return false;
  }
}

/// Pr(query = true) by summing the joint over every instantiation.
inline Rational bn_probability(const BayesNet &bn, int query) {
  const int n = bn.num_nodes();
  Rational total(0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    auto val = [&](int v) { return static_cast<bool>((code >> (v - 1)) & 1u); };
    if (!val(query))
      continue;
    Rational p(1);
    for (int v = 1; v <= n && p != Rational(0); ++v) {
      std::size_t row = 0;
      for (int par : bn.parents(v))
        row = row * 2 + (val(par) ? 1 : 0);
      const Rational t = bn.table(v)[row];
      p *= val(v) ? t : Rational(1) - t;
    }
    total += p;
  }
  return total;
}

/// Minimal models of a positive program by enumerating all models.
inline bool is_model(const LogicProgram &p, const std::set<int> &m) {
  for (const Rule &r : p.rules()) {
    bool body = true;
    for (int a : r.pos)
      body = body && m.count(a);
    for (int b : r.neg)
      body = body && !m.count(b);
    if (body && !m.count(r.head))
      return false;
  }
  return true;
}

/// I is stable iff I is a minimal model of the reduct, checked by comparing
/// against every subset of I.
inline bool stable_by_minimality(const LogicProgram &p, const std::set<int> &interp) {
  std::vector<Rule> kept;
  for (const Rule &r : p.rules()) {
    bool blocked = false;
    for (int b : r.neg)
      blocked = blocked || interp.count(b);
    if (!blocked)
      kept.emplace_back(r.head, r.pos, std::vector<int>{});
  }
  const LogicProgram reduct(p.atoms(), kept);
  if (!is_model(reduct, interp))
    return false;
  const std::vector<int> elems(interp.begin(), interp.end());
  for (std::uint64_t code = 0; code + 1 < (std::uint64_t{1} << elems.size()); ++code) {
    std::set<int> sub;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if ((code >> i) & 1u)
        sub.insert(elems[i]);
    if (is_model(reduct, sub))
      return false;
  }
  return true;
}

inline std::vector<std::set<int>> stable_models(const LogicProgram &p) {
  std::vector<std::set<int>> out;
  const int n = p.num_atoms();
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    std::set<int> s;
    for (int a = 1; a <= n; ++a)
      if ((code >> (a - 1)) & 1u)
        s.insert(a);
    if (stable_by_minimality(p, s))
      out.push_back(s);
  }
  return out;
}

/// True iff the simple graph (vertices 1..n) has a cycle, by DFS with parent tracking.
inline bool has_cycle(int n, const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
  std::function<bool(int, int)> dfs = [&](int v, int parent) {
    state[static_cast<std::size_t>(v)] = 1;
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (u == parent)
        continue;
      if (state[static_cast<std::size_t>(u)] || dfs(u, v))
        return true;
    }
    return false;
  };
  for (int v = 1; v <= n; ++v)
    if (!state[static_cast<std::size_t>(v)] && dfs(v, 0))
      return true;
  return false;
}

/// Decomposition validity straight from the definition: the tree is
/// connected and acyclic, every vertex and edge sits in some bag, and each
/// vertex's nodes form a connected subgraph of the tree.
inline bool valid_decomposition(const Graph &g, const TreeDecomposition &td, std::optional<int> width = {}) {
  const int nodes = td.num_nodes();
  if (nodes == 0)
    return g.num_vertices() == 0;
  if (static_cast<int>(td.tree_edges().size()) != nodes - 1 || has_cycle(nodes, td.tree_edges()))
    return false;
  auto in_bag = [&](int node, int v) {
    const auto &b = td.bag(node);
    return std::find(b.begin(), b.end(), v) != b.end();
  };
  for (int node = 1; node <= nodes; ++node)
    for (int v : td.bag(node))
      if (v < 1 || v > g.num_vertices())
        return false;
  for (int v = 1; v <= g.num_vertices(); ++v) {
    std::vector<int> holders;
    for (int node = 1; node <= nodes; ++node)
      if (in_bag(node, v))
        holders.push_back(node);
    if (holders.empty())
      return false;
    std::set<int> reached{holders[0]};
    std::queue<int> q;
    q.push(holders[0]);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (auto [a, b] : td.tree_edges()) {
        const int y = a == x ? b : b == x ? a : 0;
        if (y && in_bag(y, v) && reached.insert(y).second)
          q.push(y);
      }
    }
    if (reached.size() != holders.size())
      return false;
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int node = 1; node <= nodes && !covered; ++node)
      covered = in_bag(node, u) && in_bag(node, v);
    if (!covered)
      return false;
  }
  if (width)
    for (int node = 1; node <= nodes; ++node)
      if (static_cast<int>(td.bag(node).size()) - 1 > *width)
        return false;
  return true;
}

} // namespace ref
