#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "klb/caps.hpp"
#include "klb/csp.hpp"
#include "klb/error.hpp"
#include "klb/graph.hpp"
#include "klb/result.hpp"
#include "klb/verify/structure.hpp"

namespace klb {

/// Values indexed by variable - 1.
using CspResult = Decision<std::vector<int>>;

namespace detail {

inline std::uint64_t saturating_power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      return UINT64_MAX;
    r *= base;
  }
  return r;
}

} // namespace detail

/// Backtracking enumeration over variables 1..n with values ascending; a
/// constraint is tested as soon as its last scope variable is assigned. The
/// witness is the lexicographically least solution.
inline CspResult csp_brute(const ConstraintNetwork &net, const OracleCaps &caps = {}) {
  const int n = net.num_vars();
  if (detail::saturating_power(net.universe().size(), n) > caps.csp_assignments)
    throw CapExceeded("csp_brute: |U|^|V| exceeds cap");
  std::vector<std::vector<const Constraint *>> due(static_cast<std::size_t>(n) + 1);
  for (const Constraint &c : net.constraints()) {
    if (c.scope.empty()) {
      if (c.relation.empty())
        return CspResult::no();
      continue;
    }
    due[static_cast<std::size_t>(*std::max_element(c.scope.begin(), c.scope.end()))].push_back(&c);
  }
  const auto &u = net.universe();
  std::vector<int> values(static_cast<std::size_t>(n));
  std::vector<std::size_t> choice(static_cast<std::size_t>(n) + 1, 0);
  Tuple t;
  auto consistent = [&](int v) {
    for (const Constraint *c : due[static_cast<std::size_t>(v)]) {
      t.clear();
      for (int x : c->scope)
        t.push_back(values[static_cast<std::size_t>(x - 1)]);
      if (!c->allows(t))
        return false;
    }
    return true;
  };
  if (n == 0)
    return CspResult::yes({});
  int v = 1;
  choice[1] = 0;
  while (v >= 1) {
    auto &ch = choice[static_cast<std::size_t>(v)];
    if (ch == u.size()) {
      --v;
      if (v >= 1)
        ++choice[static_cast<std::size_t>(v)];
      continue;
    }
    values[static_cast<std::size_t>(v - 1)] = u[ch];
    if (!consistent(v)) {
      ++ch;
      continue;
    }
    if (v == n)
      return CspResult::yes(values);
    ++v;
    choice[static_cast<std::size_t>(v)] = 0;
  }
  return CspResult::no();
}

namespace detail {

/// Bottom-up join/project evaluation over a rooted tree decomposition.
class JoinTreeDp {
public:
  JoinTreeDp(const ConstraintNetwork &net, const TreeDecomposition &td) : net_(net), td_(td) {
    auto rep = verify::check_tree_decomposition(constraint_graph(net), td);
    if (!rep.passed()) {
      std::string why;
      for (const auto &c : rep.checks)
        if (!c.passed)
          why += (why.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : ": " + c.detail);
      throw InvalidInput("invalid tree decomposition: " + why);
    }
    const int nodes = td.num_nodes();
    if (nodes == 0)
      return;
    // Root at node 1; BFS gives depth order.
    const auto adj = td.tree().adjacency();
    parent_.assign(static_cast<std::size_t>(nodes) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(nodes) + 1, false);
    std::queue<int> q;
    q.push(1);
    seen[1] = true;
    while (!q.empty()) {
      int p = q.front();
      q.pop();
      order_.push_back(p);
      for (int r : adj[static_cast<std::size_t>(p)])
        if (!seen[static_cast<std::size_t>(r)]) {
          seen[static_cast<std::size_t>(r)] = true;
          parent_[static_cast<std::size_t>(r)] = p;
          q.push(r);
        }
    }
    children_.assign(static_cast<std::size_t>(nodes) + 1, {});
    for (int p : order_)
      if (parent_[static_cast<std::size_t>(p)])
        children_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(p)])].push_back(p);

    // Each constraint goes to the shallowest bag containing its scope.
    attached_.assign(static_cast<std::size_t>(nodes) + 1, {});
    for (std::size_t i = 0; i < net.constraints().size(); ++i) {
      const Constraint &c = net.constraints()[i];
      if (c.scope.size() == 1)
        continue; // folded into domains
      bool placed = false;
      for (int p : order_) {
        const auto &b = td.bag(p);
        if (std::all_of(c.scope.begin(), c.scope.end(),
                        [&](int v) { return std::binary_search(b.begin(), b.end(), v); })) {
          attached_[static_cast<std::size_t>(p)].push_back(&c);
          placed = true;
          break;
        }
      }
      if (!placed)
        throw InvalidInput("constraint " + std::to_string(i + 1) + ": scope not covered by any bag");
    }
  }

  /// Domains after applying unary constraints.
  std::vector<std::vector<int>> initial_domains() const {
    std::vector<std::vector<int>> dom(static_cast<std::size_t>(net_.num_vars()) + 1,
                                      net_.universe());
    dom[0].clear();
    for (const Constraint &c : net_.constraints()) {
      if (c.scope.size() != 1)
        continue;
      auto &d = dom[static_cast<std::size_t>(c.scope[0])];
      std::vector<int> kept;
      for (int x : d)
        if (c.allows({x}))
          kept.push_back(x);
      d = std::move(kept);
    }
    return dom;
  }

  bool has_nullary_conflict() const {
    return std::any_of(net_.constraints().begin(), net_.constraints().end(),
                       [](const Constraint &c) { return c.scope.empty() && c.relation.empty(); });
  }

  /// Satisfiability under the given per-variable domains (index = variable).
  bool decide(const std::vector<std::vector<int>> &dom) const {
    if (has_nullary_conflict())
      return false;
    for (int v = 1; v <= net_.num_vars(); ++v)
      if (dom[static_cast<std::size_t>(v)].empty())
        return false;
    if (order_.empty())
      return true;
    const auto nodes = static_cast<std::size_t>(td_.num_nodes());
    // Projections of each node's table onto its separator with the parent.
    std::vector<std::set<Tuple>> up(nodes + 1);
    std::vector<std::vector<int>> separator(nodes + 1);
    for (int p : order_) {
      int par = parent_[static_cast<std::size_t>(p)];
      if (!par)
        continue;
      const auto &a = td_.bag(p);
      const auto &b = td_.bag(par);
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(separator[static_cast<std::size_t>(p)]));
    }
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const int p = *it;
      const auto &bag = td_.bag(p);
      const std::size_t width = bag.size();
      std::vector<std::size_t> pos_in_bag(static_cast<std::size_t>(net_.num_vars()) + 1, 0);
      for (std::size_t i = 0; i < width; ++i)
        pos_in_bag[static_cast<std::size_t>(bag[i])] = i;

      std::vector<std::size_t> idx(width, 0);
      std::vector<int> row(width);
      bool any = false;
      Tuple t;
      while (true) {
        for (std::size_t i = 0; i < width; ++i)
          row[i] = dom[static_cast<std::size_t>(bag[i])][idx[i]];
        bool ok = true;
        for (const Constraint *c : attached_[static_cast<std::size_t>(p)]) {
          t.clear();
          for (int x : c->scope)
            t.push_back(row[pos_in_bag[static_cast<std::size_t>(x)]]);
          if (!c->allows(t)) {
            ok = false;
            break;
          }
        }
        for (std::size_t k = 0; ok && k < children_[static_cast<std::size_t>(p)].size(); ++k) {
          int ch = children_[static_cast<std::size_t>(p)][k];
          t.clear();
          for (int x : separator[static_cast<std::size_t>(ch)])
            t.push_back(row[pos_in_bag[static_cast<std::size_t>(x)]]);
          ok = up[static_cast<std::size_t>(ch)].count(t) > 0;
        }
        if (ok) {
          any = true;
          if (!parent_[static_cast<std::size_t>(p)])
            return true;
          t.clear();
          for (int x : separator[static_cast<std::size_t>(p)])
            t.push_back(row[pos_in_bag[static_cast<std::size_t>(x)]]);
          up[static_cast<std::size_t>(p)].insert(t);
        }
        // odometer
        std::size_t i = width;
        while (i > 0) {
          --i;
          if (++idx[i] < dom[static_cast<std::size_t>(bag[i])].size())
            break;
          idx[i] = 0;
          if (i == 0) {
            i = width + 1;
            break;
          }
        }
        if (width == 0 || i == width + 1)
          break;
      }
      if (!any)
        return false;
    }
    return true;
  }

private:
  const ConstraintNetwork &net_;
  const TreeDecomposition &td_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<const Constraint *>> attached_;
};

} // namespace detail

/// Decision by dynamic programming over a tree decomposition of the
/// constraint graph: each node keeps the bag assignments that satisfy its
/// attached constraints and agree with some row of every child on the shared
/// variables. Runs in O(nodes * |U|^(w+1)) table steps. The witness is the
/// lexicographically least solution, found by fixing variables one at a time.
inline CspResult csp_treewidth_dp(const ConstraintNetwork &net, const TreeDecomposition &td) {
  detail::JoinTreeDp dp(net, td);
  auto dom = dp.initial_domains();
  if (!dp.decide(dom))
    return CspResult::no();
  std::vector<int> witness(static_cast<std::size_t>(net.num_vars()));
  for (int v = 1; v <= net.num_vars(); ++v) {
    auto candidates = dom[static_cast<std::size_t>(v)];
    bool fixed = false;
    for (int x : candidates) {
      dom[static_cast<std::size_t>(v)] = {x};
      if (dp.decide(dom)) {
        witness[static_cast<std::size_t>(v - 1)] = x;
        fixed = true;
        break;
      }
    }
    if (!fixed)
      throw Error("csp_treewidth_dp: self-reduction lost satisfiability");
  }
  return CspResult::yes(std::move(witness));
}

/// Decision only, without witness reconstruction.
inline bool csp_treewidth_decide(const ConstraintNetwork &net, const TreeDecomposition &td) {
  detail::JoinTreeDp dp(net, td);
  return dp.decide(dp.initial_domains());
}

} // namespace klb
