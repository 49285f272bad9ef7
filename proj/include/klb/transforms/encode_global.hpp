#pragma once

#include <string>
#include <vector>

#include "klb/cnf.hpp"
#include "klb/error.hpp"
#include "klb/global_constraint.hpp"
#include "klb/transforms/ppt.hpp"

namespace klb {

/// Measured domain parameters of a global constraint.
struct DomainReport {
  int dx = 0;
  int dxy = 0;
  int dy = 0;

  static DomainReport of(const GlobalConstraint &g) { return {g.dx(), g.dxy(), g.dy()}; }
  friend bool operator==(const DomainReport &, const DomainReport &) = default;
};

/// CNF -> global constraint. Formula variable x_i becomes constraint
/// variable i with dom = {-i, i}; clause C_j becomes variable n + j whose
/// domain holds i for each literal x_i and -i for each literal -x_i.
///
///   NValue:   X = {x_1..x_n, C_1..C_m}, N = n       (alpha(x_i) = i: x_i true)
///   Disjoint: X = {x_1..x_n}, Y = {C_1..C_m}        (alpha(x_i) = i: x_i false)
///   Uses:     X = {C_1..C_m}, Y = {x_1..x_n}        (alpha(x_i) = i: x_i true)
///
/// The parameter is dx, dxy or dy respectively.
inline PptOutput<GlobalConstraint, DomainReport> encode_global(const CnfFormula &f, GlobalKind kind) {
  if (f.has_empty_clause())
    throw InvalidInput("encode_global: formula has an empty clause");
  const int n = f.num_vars();
  const int m = static_cast<int>(f.num_clauses());
  if (kind == GlobalKind::NValue && n == 0)
    throw InvalidInput("encode_global: NValue needs at least one variable (N >= 1)");
  std::vector<std::string> names;
  std::vector<std::vector<int>> domains;
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    domains.push_back({-i, i});
  }
  for (int j = 1; j <= m; ++j) {
    names.push_back("C" + std::to_string(j));
    std::vector<int> d;
    for (Lit l : f.clauses()[static_cast<std::size_t>(j - 1)])
      d.push_back(l.dimacs());
    domains.push_back(std::move(d));
  }
  std::vector<int> var_ids, clause_ids;
  for (int i = 1; i <= n; ++i)
    var_ids.push_back(i);
  for (int j = 1; j <= m; ++j)
    clause_ids.push_back(n + j);

  GlobalConstraint g;
  long long param = 0;
  switch (kind) {
  case GlobalKind::NValue: {
    std::vector<int> x = var_ids;
    x.insert(x.end(), clause_ids.begin(), clause_ids.end());
    g = GlobalConstraint(kind, std::move(names), std::move(domains), std::move(x), {}, n);
    param = g.dx();
    break;
  }
  case GlobalKind::Disjoint:
    g = GlobalConstraint(kind, std::move(names), std::move(domains), var_ids, clause_ids);
    param = g.dxy();
    break;
  case GlobalKind::Uses:
    g = GlobalConstraint(kind, std::move(names), std::move(domains), clause_ids, var_ids);
    param = g.dy();
    break;
  }
  DomainReport rep = DomainReport::of(g);
  return {std::move(g), rep, param};
}

} // namespace klb
