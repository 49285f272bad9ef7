#pragma once

#include <set>
#include <vector>

#include "klb/cnf.hpp"
#include "klb/error.hpp"

namespace klb {

/// Number of distinct nonempty clauses of at most three literals over n
/// variables: sum over r = 1..3 of C(n, r) * 2^r.
inline long long max_distinct_3clauses(long long n) {
  return 2 * n + 4 * (n * (n - 1) / 2) + 8 * (n * (n - 1) * (n - 2) / 6);
}

/// Polynomial kernel for 3SAT parameterized by the number of variables:
/// clauses equal up to literal order are kept once, in first-occurrence
/// order. A formula with an empty clause reduces to that clause alone.
inline CnfFormula kernel_3sat_vars(const CnfFormula &f) {
  if (!f.is_3cnf())
    throw InvalidInput("kernel_3sat_vars: formula is not 3CNF");
  if (f.has_empty_clause())
    return CnfFormula(f.num_vars(), {Clause{}});
  std::set<Clause> seen;
  std::vector<Clause> kept;
  for (const Clause &c : f.clauses())
    if (seen.insert(c.canonical()).second)
      kept.push_back(c);
  return CnfFormula(f.num_vars(), std::move(kept));
}

} // namespace klb
