#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klb/caps.hpp"
#include "klb/cnf.hpp"
#include "klb/error.hpp"
#include "klb/result.hpp"

namespace klb {

/// Total assignment, entry i is the value of variable i + 1.
using Assignment = std::vector<bool>;
using SatResult = Decision<Assignment>;

/// Exhaustive search. Assignments are visited in lexicographic order with
/// variable 1 most significant and true before false, so the witness is the
/// first satisfying assignment in that order.
inline SatResult brute_sat(const CnfFormula &f, const OracleCaps &caps = {}) {
  const int n = f.num_vars();
  if (n > caps.sat_vars || n > 62)
    throw CapExceeded("brute_sat: " + std::to_string(n) + " variables exceed cap " +
                      std::to_string(caps.sat_vars));
  const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  // Variable i lives at bit n - i.
  struct Masks {
    std::uint64_t pos = 0, neg = 0;
  };
  std::vector<Masks> clauses;
  clauses.reserve(f.num_clauses());
  for (const Clause &c : f.clauses()) {
    Masks m;
    for (Lit l : c)
      (l.positive() ? m.pos : m.neg) |= std::uint64_t{1} << (n - l.var());
    if (m.pos == 0 && m.neg == 0)
      return SatResult::no();
    clauses.push_back(m);
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < count; ++code) {
    const std::uint64_t a = ~code & full;
    bool ok = true;
    for (const Masks &m : clauses)
      if (!((a & m.pos) | (~a & m.neg))) {
        ok = false;
        break;
      }
    if (ok) {
      Assignment w(static_cast<std::size_t>(n));
      for (int v = 1; v <= n; ++v)
        w[static_cast<std::size_t>(v - 1)] = (a >> (n - v)) & 1u;
      return SatResult::yes(std::move(w));
    }
  }
  return SatResult::no();
}

enum class SubSolverKind { Horn, TwoCnf };

inline std::string to_string(SubSolverKind k) { return k == SubSolverKind::Horn ? "horn" : "2cnf"; }

inline SubSolverKind subsolver_kind_from_string(const std::string &s) {
  if (s == "horn")
    return SubSolverKind::Horn;
  if (s == "2cnf")
    return SubSolverKind::TwoCnf;
  throw InvalidInput("unknown sub-solver kind '" + s + "' (expected horn or 2cnf)");
}

enum class SubSolverOutcome { Rejected, Satisfiable, Unsatisfiable };

inline std::string to_string(SubSolverOutcome o) {
  switch (o) {
  case SubSolverOutcome::Rejected:
    return "rejected";
  case SubSolverOutcome::Satisfiable:
    return "satisfiable";
  case SubSolverOutcome::Unsatisfiable:
    return "unsatisfiable";
  }
  return "?";
}

struct SubSolverResult {
  SubSolverOutcome outcome = SubSolverOutcome::Rejected;
  std::optional<Assignment> witness;
};

/// Membership in the class decided by the sub-solver.
inline bool in_class(SubSolverKind kind, const CnfFormula &f) {
  return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause &c) {
    return kind == SubSolverKind::Horn ? c.num_positive() <= 1 : c.size() <= 2;
  });
}

namespace detail {

// Unit propagation to fixpoint; remaining variables default to false.
inline SubSolverResult solve_horn(const CnfFormula &f) {
  const auto n = static_cast<std::size_t>(f.num_vars());
  std::vector<signed char> val(n + 1, -1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause &c : f.clauses()) {
      int open = 0;
      Lit last;
      bool satisfied = false;
      for (Lit l : c) {
        signed char x = val[static_cast<std::size_t>(l.var())];
        if (x < 0) {
          ++open;
          last = l;
        } else if (l.satisfied_by(x == 1)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied)
        continue;
      if (open == 0)
        return {SubSolverOutcome::Unsatisfiable, std::nullopt};
      if (open == 1) {
        val[static_cast<std::size_t>(last.var())] = last.positive() ? 1 : 0;
        changed = true;
      }
    }
  }
  Assignment w(n);
  for (std::size_t v = 1; v <= n; ++v)
    w[v - 1] = val[v] == 1;
  return {SubSolverOutcome::Satisfiable, std::move(w)};
}

// Implication graph over 2n literal nodes; Tarjan's strong components.
inline SubSolverResult solve_2cnf(const CnfFormula &f) {
  const auto n = static_cast<std::size_t>(f.num_vars());
  auto node = [](Lit l) {
    return static_cast<std::size_t>(2 * (l.var() - 1) + (l.positive() ? 0 : 1));
  };
  std::vector<std::vector<std::size_t>> succ(2 * n);
  for (const Clause &c : f.clauses()) {
    if (c.empty())
      return {SubSolverOutcome::Unsatisfiable, std::nullopt};
    Lit a = c.literals().front();
    Lit b = c.literals().back();
    succ[node(~a)].push_back(node(b));
    if (c.size() == 2)
      succ[node(~b)].push_back(node(a));
  }

  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(2 * n, unvisited), low(2 * n, 0), comp(2 * n, unvisited);
  std::vector<bool> on_stack(2 * n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, components = 0;
  struct Frame {
    std::size_t v, next;
  };
  for (std::size_t root = 0; root < 2 * n; ++root) {
    if (index[root] != unvisited)
      continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame &fr = call.back();
      if (fr.next < succ[fr.v].size()) {
        std::size_t w = succ[fr.v][fr.next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
        continue;
      }
      std::size_t v = fr.v;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      call.pop_back();
      if (!call.empty())
        low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  Assignment w(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (comp[2 * v] == comp[2 * v + 1])
      return {SubSolverOutcome::Unsatisfiable, std::nullopt};
    // Components are numbered in reverse topological order.
    w[v] = comp[2 * v] < comp[2 * v + 1];
  }
  return {SubSolverOutcome::Satisfiable, std::move(w)};
}

} // namespace detail

/// Polynomial-time sub-solver: rejects formulas outside its class, decides
/// the rest. Horn: unit propagation, O(n*m). 2CNF: strong components, linear.
inline SubSolverResult subsolver_run(SubSolverKind kind, const CnfFormula &f) {
  if (!in_class(kind, f))
    return {SubSolverOutcome::Rejected, std::nullopt};
  return kind == SubSolverKind::Horn ? detail::solve_horn(f) : detail::solve_2cnf(f);
}

/// Calls `visit(tau)` for every assignment to `vars` in true-first
/// lexicographic order (first listed variable most significant). Stops early
/// when `visit` returns false.
template <class Visit>
void for_each_assignment(const std::vector<int> &vars, Visit &&visit) {
  const std::size_t k = vars.size();
  if (k > 62)
    throw CapExceeded("too many variables to enumerate");
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t code = 0; code < count; ++code) {
    PartialAssignment tau;
    for (std::size_t i = 0; i < k; ++i)
      tau[vars[i]] = !((code >> (k - 1 - i)) & 1u);
    if (!visit(tau))
      return;
  }
}

/// Decides F by running the sub-solver on F[tau] for every assignment tau of
/// the backdoor. Every restriction is examined, so a set that is not a strong
/// backdoor is always reported.
inline SatResult backdoor_solve(const CnfFormula &f, std::vector<int> backdoor, SubSolverKind kind,
                                const OracleCaps &caps = {}) {
  std::sort(backdoor.begin(), backdoor.end());
  backdoor.erase(std::unique(backdoor.begin(), backdoor.end()), backdoor.end());
  for (int v : backdoor)
    if (v < 1 || v > f.num_vars())
      throw InvalidInput("backdoor variable " + std::to_string(v) + " is not a formula variable");
  if (static_cast<int>(backdoor.size()) > caps.backdoor_size)
    throw CapExceeded("backdoor of size " + std::to_string(backdoor.size()) + " exceeds cap");
  std::optional<Assignment> witness;
  for_each_assignment(backdoor, [&](const PartialAssignment &tau) {
    SubSolverResult r = subsolver_run(kind, apply_assignment(f, tau));
    if (r.outcome == SubSolverOutcome::Rejected)
      throw BackdoorInvalid("sub-solver " + to_string(kind) +
                            " rejects a restriction; not a strong backdoor");
    if (r.outcome == SubSolverOutcome::Satisfiable && !witness) {
      Assignment w = std::move(*r.witness);
      for (const auto &[v, b] : tau)
        w[static_cast<std::size_t>(v - 1)] = b;
      witness = std::move(w);
    }
    return true;
  });
  return witness ? SatResult::yes(std::move(*witness)) : SatResult::no();
}

} // namespace klb
