#pragma once

#include <string>
#include <vector>

#include "klb/bayes_net.hpp"
#include "klb/cnf.hpp"
#include "klb/error.hpp"
#include "klb/transforms/ppt.hpp"

namespace klb {

/// CNF -> Boolean network whose query node is positive iff F is satisfiable.
///
/// Input nodes u_1..u_n are roots with prior 1/2. A clause with literals
/// l_1..l_r becomes a chain of max(1, r-1) deterministic clause nodes: the
/// first reads (u_{l_1}, u_{l_2}) (or just u_{l_1} when r = 1), each later
/// one reads (previous chain node, u_{l_{k+1}}), and each computes the running
/// disjunction with literal signs folded into its table. Conjunction nodes
/// d_1..d_m follow: d_1 copies the last chain node of clause 1 and d_j is
/// d_{j-1} AND (last chain node of clause j). The query is d_m; for a formula
/// without clauses it is a single root d_1 that is always true.
///
/// The certificate is {u_1..u_n}, a loop cutset: every undirected cycle of
/// the skeleton passes through an input node.
inline PptOutput<BnQuery, std::vector<int>> sat_to_bn(const CnfFormula &f) {
  if (f.has_empty_clause())
    throw InvalidInput("sat_to_bn: formula has an empty clause");
  const int n = f.num_vars();
  std::vector<std::string> names;
  std::vector<std::vector<int>> parents;
  std::vector<std::vector<Rational>> tables;
  auto add = [&](std::string name, std::vector<int> ps, std::vector<Rational> t) {
    names.push_back(std::move(name));
    parents.push_back(std::move(ps));
    tables.push_back(std::move(t));
    return static_cast<int>(names.size());
  };
  const Rational zero(0), one(1);
  auto bit = [](bool b) { return b ? Rational(1) : Rational(0); };

  for (int i = 1; i <= n; ++i)
    add("u" + std::to_string(i), {}, {Rational(1, 2)});

  std::vector<int> clause_out;
  int j = 0;
  for (const Clause &c : f.clauses()) {
    ++j;
    const auto &lits = c.literals();
    const std::string base = "c" + std::to_string(j) + "_";
    if (lits.size() == 1) {
      // rows: parent false, parent true
      clause_out.push_back(add(base + "1", {lits[0].var()},
                               {bit(lits[0].satisfied_by(false)), bit(lits[0].satisfied_by(true))}));
      continue;
    }
    std::vector<Rational> first;
    for (int r = 0; r < 4; ++r)
      first.push_back(bit(lits[0].satisfied_by(r & 2) || lits[1].satisfied_by(r & 1)));
    int prev = add(base + "1", {lits[0].var(), lits[1].var()}, std::move(first));
    for (std::size_t k = 2; k < lits.size(); ++k) {
      std::vector<Rational> t;
      for (int r = 0; r < 4; ++r)
        t.push_back(bit((r & 2) || lits[k].satisfied_by(r & 1)));
      prev = add(base + std::to_string(k), {prev, lits[k].var()}, std::move(t));
    }
    clause_out.push_back(prev);
  }

  int query;
  if (clause_out.empty()) {
    query = add("d1", {}, {one});
  } else {
    query = add("d1", {clause_out[0]}, {zero, one});
    for (std::size_t k = 1; k < clause_out.size(); ++k)
      query = add("d" + std::to_string(k + 1), {query, clause_out[k]}, {zero, zero, zero, one});
  }

  std::vector<int> cutset;
  for (int i = 1; i <= n; ++i)
    cutset.push_back(i);
  BnQuery out{BayesNet(std::move(names), std::move(parents), std::move(tables)), query};
  return {std::move(out), std::move(cutset), n};
}

} // namespace klb
