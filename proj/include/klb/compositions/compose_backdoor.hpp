#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "klb/caps.hpp"
#include "klb/cnf.hpp"
#include "klb/error.hpp"
#include "klb/solvers/sat.hpp"
#include "klb/verify/backdoor.hpp"

namespace klb {

/// A 3CNF formula together with a strong backdoor for some sub-solver class.
struct BackdoorInstance {
  CnfFormula formula;
  std::vector<int> backdoor;
};

enum class CompositionCase { PassThrough, Case1, Case2 };

inline std::string to_string(CompositionCase c) {
  switch (c) {
  case CompositionCase::PassThrough:
    return "pass-through";
  case CompositionCase::Case1:
    return "case1";
  case CompositionCase::Case2:
    return "case2";
  }
  return "?";
}

struct BackdoorCompositionOutput {
  CnfFormula formula;
  std::vector<int> backdoor; // ascending
  CompositionCase case_taken = CompositionCase::PassThrough;
  int k = 0;        // common input backdoor size
  int s = 0;        // ceil(log2 t) in case 2, else 0
  int selected = 0; // 1-based input returned verbatim (pass-through, case 1)
  std::vector<std::string> names; // per output variable
};

/// ceil(log2 t) for t >= 1.
inline int ceil_log2(long long t) {
  int s = 0;
  while ((1LL << s) < t)
    ++s;
  return s;
}

/// The i-th (1-based) clause over y_1..y_s: literal j is y_j when bit j-1 of
/// i-1 is 0 and -y_j when it is 1. Exactly one of the 2^s clauses is
/// falsified by any assignment of Y. `y_first` is the id of y_1.
inline std::vector<Lit> selector_clause(int i, int s, int y_first) {
  std::vector<Lit> c;
  for (int j = 1; j <= s; ++j)
    c.emplace_back(y_first + j - 1, !(((i - 1) >> (j - 1)) & 1));
  return c;
}

namespace detail {

// Replaces every clause that mentions no variable outside `backdoor` by an
// equisatisfiable pair that does, using a fresh guard variable g:
//   ()             -> (g), (-g)
//   (l_1..l_r)     -> (l_1..l_{r-1}, g), (-g, l_r)
// Under any assignment of the backdoor the new clauses shrink to (g) / (-g)
// or vanish, so the backdoor stays a Horn and 2CNF backdoor. Returns the
// formula and the number of guards added.
inline std::pair<CnfFormula, int> guard_backdoor_only_clauses(const CnfFormula &f,
                                                              const std::set<int> &backdoor) {
  int n = f.num_vars();
  const int original = n;
  std::vector<Clause> out;
  for (const Clause &c : f.clauses()) {
    bool has_free = std::any_of(c.begin(), c.end(), [&](Lit l) { return !backdoor.count(l.var()); });
    if (has_free) {
      out.push_back(c);
      continue;
    }
    const int g = ++n;
    std::vector<Lit> head(c.begin(), c.end());
    if (head.empty()) {
      out.push_back(Clause{Lit(g, true)});
      out.push_back(Clause{Lit(g, false)});
      continue;
    }
    Lit last = head.back();
    head.pop_back();
    head.emplace_back(g, true);
    out.emplace_back(std::move(head));
    out.push_back(Clause{Lit(g, false), last});
  }
  return {CnfFormula(n, std::move(out)), n - original};
}

} // namespace detail

/// OR-composition for 3SAT parameterized by the size k of a Horn or 2CNF
/// strong backdoor.
///
/// t = 1: the input is returned unchanged.
/// Case 1, t > 2^k: every input is decided through its backdoor (2^k
///   sub-solver calls each); the first satisfiable input is returned, or
///   input 1 when none is.
/// Case 2, 2 <= t <= 2^k: with s = ceil(log2 t) new selector variables Y,
///   backdoors are identified positionally (sorted B_i maps onto shared
///   b_1..b_k) and all other variables renamed apart. Each other variable x
///   of input i is split into a chain x_0..x_s: positive occurrences read
///   x_0, negative ones read -x_s, and connection clauses
///   (-x_{j-1} v x_j v l^i_j), j = 1..s, make x_0 -> x_s hold exactly when Y
///   falsifies the selector clause C_i. Unused selector clauses C_i, t < i <=
///   2^s, are added directly (s <= 3) or split with z-variables (s > 3) so
///   those Y-assignments are excluded. The backdoor is Y + {b_1..b_k}.
///   Clauses of an input made only of backdoor variables would otherwise be
///   shared by all inputs; they are first rewritten through a fresh guard
///   variable (see guard_backdoor_only_clauses) so every clause hangs on
///   some chain.
inline BackdoorCompositionOutput compose_3sat_backdoor(std::span<const BackdoorInstance> inputs,
                                                       SubSolverKind kind,
                                                       const OracleCaps &caps = {}) {
  const int t = static_cast<int>(inputs.size());
  if (t == 0)
    throw InvalidInput("compose_3sat_backdoor: no inputs");
  std::vector<std::vector<int>> backdoors;
  for (int i = 0; i < t; ++i) {
    const BackdoorInstance &in = inputs[static_cast<std::size_t>(i)];
    const std::string where = "compose_3sat_backdoor: input " + std::to_string(i + 1);
    if (!in.formula.is_3cnf())
      throw InvalidInput(where + ": formula is not 3CNF");
    std::vector<int> b = in.backdoor;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (b.size() != in.backdoor.size())
      throw InvalidInput(where + ": backdoor lists a variable twice");
    if (!backdoors.empty() && b.size() != backdoors.front().size())
      throw InvalidInput(where + ": backdoor size differs from input 1");
    if (!verify::check_backdoor(in.formula, b, kind, caps).passed())
      throw BackdoorInvalid(where + ": not a strong " + to_string(kind) + " backdoor");
    backdoors.push_back(std::move(b));
  }
  const int k = static_cast<int>(backdoors.front().size());

  BackdoorCompositionOutput out;
  out.k = k;
  auto verbatim = [&](int i, CompositionCase which) {
    out.formula = inputs[static_cast<std::size_t>(i)].formula;
    out.backdoor = backdoors[static_cast<std::size_t>(i)];
    out.case_taken = which;
    out.selected = i + 1;
    for (int v = 1; v <= out.formula.num_vars(); ++v)
      out.names.push_back("x" + std::to_string(v));
    return out;
  };

  if (t == 1)
    return verbatim(0, CompositionCase::PassThrough);
  if (k < 62 && t > (1LL << k)) {
    for (int i = 0; i < t; ++i)
      if (backdoor_solve(inputs[static_cast<std::size_t>(i)].formula,
                         backdoors[static_cast<std::size_t>(i)], kind, caps)
              .satisfiable)
        return verbatim(i, CompositionCase::Case1);
    return verbatim(0, CompositionCase::Case1);
  }

  const int s = ceil_log2(t);
  out.case_taken = CompositionCase::Case2;
  out.s = s;
  int next = 0;
  for (int j = 1; j <= k; ++j) {
    out.names.push_back("b" + std::to_string(j));
    ++next;
  }
  const int y_first = next + 1;
  for (int j = 1; j <= s; ++j) {
    out.names.push_back("y" + std::to_string(j));
    ++next;
  }
  auto fresh = [&](std::string name) {
    out.names.push_back(std::move(name));
    return ++next;
  };

  std::vector<Clause> clauses;
  for (int i = 1; i <= t; ++i) {
    const auto &bd = backdoors[static_cast<std::size_t>(i - 1)];
    const std::set<int> bset(bd.begin(), bd.end());
    const auto [f, guards] =
        detail::guard_backdoor_only_clauses(inputs[static_cast<std::size_t>(i - 1)].formula, bset);
    const int original_vars = f.num_vars() - guards;
    const std::vector<Lit> selector = selector_clause(i, s, y_first);

    std::map<int, int> shared; // backdoor var -> b_j
    for (std::size_t j = 0; j < bd.size(); ++j)
      shared[bd[j]] = static_cast<int>(j) + 1;
    std::map<int, int> chain_start; // other var -> id of x_0 (x_j = x_0 + j)
    for (int v : f.occurring_vars()) {
      if (bset.count(v))
        continue;
      const std::string base = "i" + std::to_string(i) + "." +
                               (v <= original_vars ? "x" + std::to_string(v)
                                                   : "g" + std::to_string(v - original_vars));
      const int x0 = fresh(base + ".0");
      for (int j = 1; j <= s; ++j)
        fresh(base + "." + std::to_string(j));
      chain_start[v] = x0;
    }
    for (const Clause &c : f.clauses()) {
      std::vector<Lit> lits;
      for (Lit l : c) {
        if (auto it = shared.find(l.var()); it != shared.end())
          lits.emplace_back(it->second, l.positive());
        else if (l.positive())
          lits.emplace_back(chain_start.at(l.var()), true);
        else
          lits.emplace_back(chain_start.at(l.var()) + s, false);
      }
      clauses.emplace_back(std::move(lits));
    }
    for (const auto &[v, x0] : chain_start)
      for (int j = 1; j <= s; ++j)
        clauses.push_back(
            Clause{Lit(x0 + j - 1, false), Lit(x0 + j, true), selector[static_cast<std::size_t>(j - 1)]});
  }

  for (int i = t + 1; i <= (1 << s); ++i) {
    const std::vector<Lit> l = selector_clause(i, s, y_first);
    if (s <= 3) {
      clauses.emplace_back(l);
      continue;
    }
    // z_2..z_{s-2}
    std::vector<int> z(static_cast<std::size_t>(s - 1), 0);
    for (int j = 2; j <= s - 2; ++j)
      z[static_cast<std::size_t>(j)] = fresh("z" + std::to_string(i) + "." + std::to_string(j));
    auto lit = [&](int j) { return l[static_cast<std::size_t>(j - 1)]; };
    auto zv = [&](int j) { return z[static_cast<std::size_t>(j)]; };
    clauses.push_back(Clause{lit(1), lit(2), Lit(zv(2), false)});
    for (int j = 3; j <= s - 2; ++j)
      clauses.push_back(Clause{lit(j), Lit(zv(j - 1), true), Lit(zv(j), false)});
    clauses.push_back(Clause{lit(s - 1), lit(s), Lit(zv(s - 2), true)});
  }

  out.formula = CnfFormula(next, std::move(clauses));
  for (int v = 1; v <= k + s; ++v)
    out.backdoor.push_back(v);
  return out;
}

} // namespace klb
