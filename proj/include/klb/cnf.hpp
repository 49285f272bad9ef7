#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "klb/error.hpp"

namespace klb {

/// A signed variable occurrence. Variables are numbered from 1.
class Lit {
public:
  constexpr Lit() = default;
  constexpr Lit(int var, bool positive) : code_(positive ? var : -var) {
    if (var <= 0)
      throw InvalidInput("literal variable must be positive, got " + std::to_string(var));
  }

  /// Builds a literal from its DIMACS encoding (nonzero signed integer).
  static constexpr Lit from_dimacs(int code) {
    if (code == 0)
      throw InvalidInput("literal code 0 is reserved");
    return Lit(std::abs(code), code > 0);
  }

  constexpr int var() const noexcept { return code_ < 0 ? -code_ : code_; }
  constexpr bool positive() const noexcept { return code_ > 0; }
  constexpr int dimacs() const noexcept { return code_; }
  constexpr Lit operator~() const noexcept {
    Lit l;
    l.code_ = -code_;
    return l;
  }

  /// True when the literal evaluates to true under value `v` of its variable.
  constexpr bool satisfied_by(bool v) const noexcept { return v == positive(); }

  friend constexpr bool operator==(Lit, Lit) = default;
  /// Orders by variable, negative occurrence first.
  friend constexpr std::strong_ordering operator<=>(Lit a, Lit b) noexcept {
    if (auto c = a.var() <=> b.var(); c != 0)
      return c;
    return a.code_ <=> b.code_;
  }

private:
  int code_ = 0;
};

/// A disjunction of literals over pairwise distinct variables.
class Clause {
public:
  Clause() = default;
  Clause(std::initializer_list<Lit> lits) : Clause(std::vector<Lit>(lits)) {}
  explicit Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    std::set<int> seen;
    for (Lit l : lits_) {
      if (!seen.insert(l.var()).second)
        throw InvalidInput("variable " + std::to_string(l.var()) +
                           " occurs twice in one clause");
    }
  }

  /// Convenience: clause from DIMACS literal codes.
  static Clause of(std::initializer_list<int> codes) {
    std::vector<Lit> lits;
    for (int c : codes)
      lits.push_back(Lit::from_dimacs(c));
    return Clause(std::move(lits));
  }

  const std::vector<Lit> &literals() const noexcept { return lits_; }
  std::size_t size() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }
  auto begin() const noexcept { return lits_.begin(); }
  auto end() const noexcept { return lits_.end(); }

  std::size_t num_positive() const {
    return static_cast<std::size_t>(
        std::count_if(lits_.begin(), lits_.end(), [](Lit l) { return l.positive(); }));
  }

  /// Literals sorted by (variable, sign); equal for clauses that differ only in order.
  Clause canonical() const {
    Clause c = *this;
    std::sort(c.lits_.begin(), c.lits_.end());
    return c;
  }

  friend bool operator==(const Clause &, const Clause &) = default;
  friend auto operator<=>(const Clause &a, const Clause &b) { return a.lits_ <=> b.lits_; }

private:
  std::vector<Lit> lits_;
};

/// Conjunction of clauses over variables 1..num_vars.
class CnfFormula {
public:
  CnfFormula() = default;
  CnfFormula(int num_vars, std::vector<Clause> clauses)
      : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars_ < 0)
      throw InvalidInput("negative variable count");
    for (const Clause &c : clauses_)
      for (Lit l : c)
        if (l.var() > num_vars_)
          throw InvalidInput("literal " + std::to_string(l.dimacs()) + " exceeds num_vars " +
                             std::to_string(num_vars_));
  }

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Clause> &clauses() const noexcept { return clauses_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }

  bool is_3cnf() const {
    return std::all_of(clauses_.begin(), clauses_.end(),
                       [](const Clause &c) { return c.size() <= 3; });
  }
  bool has_empty_clause() const {
    return std::any_of(clauses_.begin(), clauses_.end(),
                       [](const Clause &c) { return c.empty(); });
  }

  /// Sum of clause lengths.
  std::size_t length() const {
    std::size_t n = 0;
    for (const Clause &c : clauses_)
      n += c.size();
    return n;
  }

  /// Variables that actually occur in some clause, ascending.
  std::vector<int> occurring_vars() const {
    std::set<int> vs;
    for (const Clause &c : clauses_)
      for (Lit l : c)
        vs.insert(l.var());
    return {vs.begin(), vs.end()};
  }

  /// Evaluates under a total assignment indexed by variable - 1.
  bool evaluate(const std::vector<bool> &values) const {
    return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause &c) {
      return std::any_of(c.begin(), c.end(), [&](Lit l) {
        return l.satisfied_by(values.at(static_cast<std::size_t>(l.var() - 1)));
      });
    });
  }

  friend bool operator==(const CnfFormula &, const CnfFormula &) = default;

private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

using PartialAssignment = std::map<int, bool>;

/// F[tau]: clauses satisfied by tau are removed, falsified literals are dropped.
/// The variable count is kept so identifiers stay stable.
inline CnfFormula apply_assignment(const CnfFormula &f, const PartialAssignment &tau) {
  for (const auto &[v, _] : tau)
    if (v <= 0 || v > f.num_vars())
      throw InvalidInput("assignment mentions unknown variable " + std::to_string(v));
  std::vector<Clause> out;
  out.reserve(f.num_clauses());
  for (const Clause &c : f.clauses()) {
    std::vector<Lit> kept;
    bool satisfied = false;
    for (Lit l : c) {
      auto it = tau.find(l.var());
      if (it == tau.end()) {
        kept.push_back(l);
      } else if (l.satisfied_by(it->second)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied)
      out.emplace_back(std::move(kept));
  }
  return CnfFormula(f.num_vars(), std::move(out));
}

} // namespace klb
