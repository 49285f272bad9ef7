#pragma once

#include <string>
#include <vector>

#include "klb/cnf.hpp"
#include "klb/error.hpp"
#include "klb/logic_program.hpp"
#include "klb/transforms/ppt.hpp"

namespace klb {

/// CNF -> normal logic program with a stable model iff F is satisfiable.
///
/// Atoms: x_i and x_i_hat for every variable (ids 2i-1, 2i), c_j for every
/// clause, then s and f. Rules:
///   x_hat <- not x.   x <- not x_hat.           (guess a value)
///   c <- x.  for literal x;  c <- x_hat.  for literal -x
///   f <- not f, not s.                          (kills models without s)
///   s <- c_1, ..., c_m.                          (all clauses hold)
/// The certificate {x_i, x_i_hat} meets every cycle of U(P), so the feedback
/// width is at most 2n.
inline PptOutput<LogicProgram, std::vector<int>> sat_to_sme(const CnfFormula &f) {
  if (f.has_empty_clause())
    throw InvalidInput("sat_to_sme: formula has an empty clause");
  const int n = f.num_vars();
  const int m = static_cast<int>(f.num_clauses());
  auto atom_of = [](int var) { return 2 * var - 1; };
  auto hat_of = [](int var) { return 2 * var; };
  const int s = 2 * n + m + 1;
  const int fail = s + 1;

  std::vector<std::string> atoms;
  for (int i = 1; i <= n; ++i) {
    atoms.push_back("x" + std::to_string(i));
    atoms.push_back("x" + std::to_string(i) + "_hat");
  }
  for (int j = 1; j <= m; ++j)
    atoms.push_back("c" + std::to_string(j));
  atoms.push_back("s");
  atoms.push_back("f");

  std::vector<Rule> rules;
  for (int i = 1; i <= n; ++i) {
    rules.emplace_back(hat_of(i), std::vector<int>{}, std::vector<int>{atom_of(i)});
    rules.emplace_back(atom_of(i), std::vector<int>{}, std::vector<int>{hat_of(i)});
  }
  std::vector<int> all_clauses;
  for (int j = 1; j <= m; ++j) {
    const int c = 2 * n + j;
    all_clauses.push_back(c);
    for (Lit l : f.clauses()[static_cast<std::size_t>(j - 1)])
      rules.emplace_back(c, std::vector<int>{l.positive() ? atom_of(l.var()) : hat_of(l.var())},
                         std::vector<int>{});
  }
  rules.emplace_back(fail, std::vector<int>{}, std::vector<int>{fail, s});
  rules.emplace_back(s, all_clauses, std::vector<int>{});

  std::vector<int> feedback;
  for (int a = 1; a <= 2 * n; ++a)
    feedback.push_back(a);
  return {LogicProgram(std::move(atoms), std::move(rules)), std::move(feedback), 2LL * n};
}

} // namespace klb
