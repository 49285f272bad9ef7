#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "klb/bayes_net.hpp"
#include "klb/caps.hpp"
#include "klb/cnf.hpp"
#include "klb/compositions/compose_backdoor.hpp"
#include "klb/compositions/compose_csp.hpp"
#include "klb/error.hpp"
#include "klb/logic_program.hpp"
#include "klb/solvers/sat.hpp"
#include "klb/verify/backdoor.hpp"
#include "klb/verify/structure.hpp"

namespace klb::gen {

/// mt19937_64 with distribution code of our own, so a seed gives the same
/// stream on every standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), n >= 1, by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0)
      throw InvalidInput("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do
      x = engine_();
    while (x >= limit);
    return x % n;
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  bool coin() { return below(2) == 1; }

  /// `k` distinct values of 1..n in increasing order.
  std::vector<int> subset(int n, int k) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      all[static_cast<std::size_t>(i)] = i + 1;
    shuffle(all);
    all.resize(static_cast<std::size_t>(std::min(k, n)));
    std::sort(all.begin(), all.end());
    return all;
  }

  template <class T>
  void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
  }

  template <class T>
  const T &pick(const std::vector<T> &v) {
    return v[static_cast<std::size_t>(below(v.size()))];
  }

private:
  std::mt19937_64 engine_;
};

inline Clause random_clause(Rng &rng, const std::vector<int> &vars, int len) {
  std::vector<int> pool = vars;
  rng.shuffle(pool);
  std::vector<Lit> lits;
  for (int i = 0; i < len && i < static_cast<int>(pool.size()); ++i)
    lits.emplace_back(pool[static_cast<std::size_t>(i)], rng.coin());
  return Clause(std::move(lits));
}

/// m clauses over x1..xn, lengths uniform in [min_len, max_len] (capped at n).
inline CnfFormula random_cnf(Rng &rng, int n, int m, int min_len, int max_len) {
  if (n < 0 || m < 0 || min_len < 0 || min_len > max_len)
    throw InvalidInput("random_cnf: bad bounds");
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    vars[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Clause> cs;
  for (int j = 0; j < m; ++j)
    cs.push_back(random_clause(rng, vars, std::min(n, rng.between(min_len, max_len))));
  return CnfFormula(n, std::move(cs));
}

/// 3CNF with clause lengths 1..3.
inline CnfFormula random_3cnf(Rng &rng, int n, int m) { return random_cnf(rng, n, m, 1, 3); }

/// A Boolean network of exactly `num_vars` variables whose emitted
/// decomposition has width exactly w. The decomposition is grown first: bag
/// 1 holds w + 1 fresh variables, each later bag keeps part of a random
/// earlier bag and adds fresh variables. Constraints draw their scopes from
/// single bags (arity up to `max_arity`), relations include each tuple with
/// probability 1/2.
inline CspInstance random_width_network(Rng &rng, int num_vars, int w, int num_constraints,
                                        int max_arity = 3) {
  if (w < 0 || num_vars < w + 1 || num_constraints < 0 || max_arity < 1)
    throw InvalidInput("random_width_network: need num_vars >= w + 1");
  std::vector<std::vector<int>> bags;
  std::vector<Edge> edges;
  int next = 0;
  std::vector<int> first;
  for (int i = 0; i <= w; ++i)
    first.push_back(++next);
  bags.push_back(first);
  while (next < num_vars) {
    const int parent = static_cast<int>(rng.below(bags.size())) + 1;
    const auto &pb = bags[static_cast<std::size_t>(parent - 1)];
    const int keep_max = std::min<int>(w, static_cast<int>(pb.size()));
    const int keep = rng.between(keep_max > 0 ? 1 : 0, keep_max);
    std::vector<int> bag;
    for (int idx : rng.subset(static_cast<int>(pb.size()), keep))
      bag.push_back(pb[static_cast<std::size_t>(idx - 1)]);
    const int fresh = std::min(num_vars - next, rng.between(1, w + 1 - keep));
    for (int i = 0; i < fresh; ++i)
      bag.push_back(++next);
    bags.push_back(std::move(bag));
    edges.emplace_back(parent, static_cast<int>(bags.size()));
  }
  std::vector<Constraint> cons;
  for (int c = 0; c < num_constraints; ++c) {
    const auto &bag = bags[static_cast<std::size_t>(rng.below(bags.size()))];
    const int arity = rng.between(1, std::min<int>(max_arity, static_cast<int>(bag.size())));
    std::vector<int> scope;
    for (int idx : rng.subset(static_cast<int>(bag.size()), arity))
      scope.push_back(bag[static_cast<std::size_t>(idx - 1)]);
    rng.shuffle(scope);
    std::vector<Tuple> rel;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << arity); ++code)
      if (rng.coin()) {
        Tuple t;
        for (int j = arity - 1; j >= 0; --j)
          t.push_back(static_cast<int>((code >> j) & 1u));
        rel.push_back(std::move(t));
      }
    cons.emplace_back(std::move(scope), std::move(rel));
  }
  CspInstance out{ConstraintNetwork(num_vars, {0, 1}, std::move(cons)),
                  TreeDecomposition(std::move(bags), std::move(edges))};
  if (!verify::check_tree_decomposition(constraint_graph(out.network), out.decomposition, w).passed())
    throw Error("random_width_network: generated decomposition failed verification");
  return out;
}

/// A 3CNF formula over n variables with a strong backdoor of exactly k
/// variables. Outside the backdoor each clause is Horn (at most one positive
/// literal) or has at most two literals, depending on `kind`, so every
/// restriction of the backdoor lands in the class.
inline BackdoorInstance random_backdoor_instance(Rng &rng, SubSolverKind kind, int n, int m, int k,
                                                 const OracleCaps &caps = {}) {
  if (k < 0 || k > n || m < 0)
    throw InvalidInput("random_backdoor_instance: need 0 <= k <= n");
  std::vector<int> backdoor = rng.subset(n, k);
  const std::set<int> bset(backdoor.begin(), backdoor.end());
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    all[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Clause> cs;
  for (int j = 0; j < m; ++j) {
    const int len = std::min(n, rng.between(1, 3));
    std::vector<int> pool = all;
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(len));
    std::vector<Lit> lits;
    int free_positive = 0, free_count = 0;
    for (int v : pool) {
      bool pos = rng.coin();
      if (!bset.count(v)) {
        if (kind == SubSolverKind::TwoCnf && free_count == 2) {
          if (k == 0)
            continue;
          v = rng.pick(backdoor);
          if (std::any_of(lits.begin(), lits.end(), [&](Lit l) { return l.var() == v; }))
            continue;
        } else {
          ++free_count;
          if (kind == SubSolverKind::Horn && pos && free_positive++ >= 1)
            pos = false;
        }
      }
      lits.emplace_back(v, pos);
    }
    cs.emplace_back(std::move(lits));
  }
  BackdoorInstance out{CnfFormula(n, std::move(cs)), std::move(backdoor)};
  if (!verify::check_backdoor(out.formula, out.backdoor, kind, caps).passed())
    throw Error("random_backdoor_instance: generated backdoor failed verification");
  return out;
}

/// Normal program over `atoms` atoms named a1..an with `rules` random rules,
/// each with up to `max_body` body literals.
inline LogicProgram random_program(Rng &rng, int atoms, int rules, int max_body = 3) {
  if (atoms < 1 || rules < 0 || max_body < 0)
    throw InvalidInput("random_program: bad bounds");
  std::vector<std::string> names;
  for (int a = 1; a <= atoms; ++a)
    names.push_back("a" + std::to_string(a));
  std::vector<Rule> rs;
  for (int r = 0; r < rules; ++r) {
    const int head = rng.between(1, atoms);
    std::vector<int> pos, neg;
    for (int a : rng.subset(atoms, rng.between(0, std::min(max_body, atoms))))
      (rng.coin() ? pos : neg).push_back(a);
    rs.emplace_back(head, std::move(pos), std::move(neg));
  }
  return LogicProgram(std::move(names), std::move(rs));
}

/// Probabilities drawn for generated tables; 0 and 1 appear often so that
/// positivity is a real question.
inline Rational random_probability(Rng &rng) {
  static const std::vector<Rational> choices{Rational(0),    Rational(1),    Rational(1, 2),
                                             Rational(1, 3), Rational(2, 3), Rational(0),
                                             Rational(1)};
  return rng.pick(choices);
}

/// DAG on nodes v1..vn (parents among earlier nodes, at most `max_parents`)
/// with random tables; the query is a random node.
inline BnQuery random_bn(Rng &rng, int nodes, int max_parents = 2) {
  if (nodes < 1 || max_parents < 0)
    throw InvalidInput("random_bn: bad bounds");
  std::vector<std::string> names;
  std::vector<std::vector<int>> parents;
  std::vector<std::vector<Rational>> tables;
  for (int v = 1; v <= nodes; ++v) {
    names.push_back("v" + std::to_string(v));
    std::vector<int> ps = rng.subset(v - 1, rng.between(0, std::min(max_parents, v - 1)));
    rng.shuffle(ps);
    std::vector<Rational> table;
    for (std::size_t r = 0; r < (std::size_t{1} << ps.size()); ++r)
      table.push_back(random_probability(rng));
    parents.push_back(std::move(ps));
    tables.push_back(std::move(table));
  }
  return {BayesNet(std::move(names), std::move(parents), std::move(tables)), rng.between(1, nodes)};
}

/// A loop cutset found greedily: while the skeleton minus the cutset has a
/// cycle, add a remaining node of largest degree (lowest id on ties) among
/// nodes that lie on a cycle. Not minimum.
inline std::vector<int> greedy_loop_cutset(const BayesNet &bn) {
  std::set<int> s;
  const Graph g = skeleton(bn);
  while (!is_forest(g.without(s))) {
    // Strip degree <= 1 vertices repeatedly; what is left lies on or between cycles.
    std::vector<std::set<int>> adj(static_cast<std::size_t>(g.num_vertices()) + 1);
    for (auto [u, v] : g.edges())
      if (!s.count(u) && !s.count(v)) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
      }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 1; v <= g.num_vertices(); ++v)
        if (adj[static_cast<std::size_t>(v)].size() == 1) {
          const int u = *adj[static_cast<std::size_t>(v)].begin();
          adj[static_cast<std::size_t>(v)].clear();
          adj[static_cast<std::size_t>(u)].erase(v);
          changed = true;
        }
    }
    int best = 0;
    for (int v = 1; v <= g.num_vertices(); ++v)
      if (adj[static_cast<std::size_t>(v)].size() > (best ? adj[static_cast<std::size_t>(best)].size() : 0))
        best = v;
    s.insert(best);
  }
  std::vector<int> out(s.begin(), s.end());
  if (!verify::check_loop_cutset(bn, out).passed())
    throw Error("greedy_loop_cutset: result failed verification");
  return out;
}

} // namespace klb::gen
