#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "klb/error.hpp"
#include "klb/graph.hpp"

namespace klb {

/// head <- pos_1, ..., pos_m, not neg_1, ..., not neg_n
struct Rule {
  int head = 0;
  std::vector<int> pos; // sorted, unique
  std::vector<int> neg; // sorted, unique

  Rule() = default;
  Rule(int h, std::vector<int> p, std::vector<int> n) : head(h), pos(std::move(p)), neg(std::move(n)) {
    for (auto *body : {&pos, &neg}) {
      std::sort(body->begin(), body->end());
      body->erase(std::unique(body->begin(), body->end()), body->end());
    }
  }

  friend bool operator==(const Rule &, const Rule &) = default;
};

/// Normal logic program over atoms 1..n.
class LogicProgram {
public:
  LogicProgram() = default;
  LogicProgram(std::vector<std::string> atoms, std::vector<Rule> rules)
      : atoms_(std::move(atoms)), rules_(std::move(rules)) {
    std::set<std::string> names(atoms_.begin(), atoms_.end());
    if (names.size() != atoms_.size())
      throw InvalidInput("duplicate atom name");
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const Rule &r = rules_[i];
      auto check = [&](int a) {
        if (a < 1 || a > num_atoms())
          throw InvalidInput("rule " + std::to_string(i + 1) + ": undeclared atom " +
                             std::to_string(a));
      };
      check(r.head);
      for (int a : r.pos)
        check(a);
      for (int a : r.neg)
        check(a);
    }
  }

  int num_atoms() const noexcept { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string> &atoms() const noexcept { return atoms_; }
  const std::string &atom(int a) const { return atoms_.at(static_cast<std::size_t>(a - 1)); }
  const std::vector<Rule> &rules() const noexcept { return rules_; }

  bool is_positive() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule &r) { return r.neg.empty(); });
  }

  int find(const std::string &name) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i] == name)
        return static_cast<int>(i) + 1;
    throw InvalidInput("unknown atom '" + name + "'");
  }

  /// Copy without the rule at the given 0-based index.
  LogicProgram without_rule(std::size_t index) const {
    LogicProgram p = *this;
    p.rules_.erase(p.rules_.begin() + static_cast<std::ptrdiff_t>(index));
    return p;
  }

  friend bool operator==(const LogicProgram &, const LogicProgram &) = default;

private:
  std::vector<std::string> atoms_;
  std::vector<Rule> rules_;
};

/// Gelfond-Lifschitz reduct P^I: rules blocked by I are removed, the remaining
/// negative bodies are dropped. `interpretation` lists atoms (any order).
inline LogicProgram gf_reduct(const LogicProgram &p, const std::vector<int> &interpretation) {
  std::set<int> in(interpretation.begin(), interpretation.end());
  for (int a : in)
    if (a < 1 || a > p.num_atoms())
      throw InvalidInput("interpretation mentions undeclared atom " + std::to_string(a));
  std::vector<Rule> kept;
  for (const Rule &r : p.rules()) {
    bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&](int b) { return in.count(b) > 0; });
    if (!blocked)
      kept.emplace_back(r.head, r.pos, std::vector<int>{});
  }
  return LogicProgram(p.atoms(), std::move(kept));
}

/// U(P): atoms are vertices 1..n; each (rule, negative body atom) pair adds a
/// connector vertex after them, labelled "u<rule>_<atom>" with 1-based rule
/// index. Head-to-positive-body edges that would be self-loops are omitted;
/// a negative self-reference h <- not h yields the single edge h - u.
inline Graph undirected_dependency_graph(const LogicProgram &p) {
  std::vector<std::string> labels = p.atoms();
  std::vector<Edge> edges;
  int next = p.num_atoms();
  for (std::size_t i = 0; i < p.rules().size(); ++i) {
    const Rule &r = p.rules()[i];
    for (int a : r.pos)
      if (a != r.head)
        edges.emplace_back(r.head, a);
    for (int b : r.neg) {
      int u = ++next;
      labels.push_back("u" + std::to_string(i + 1) + "_" + p.atom(b));
      edges.emplace_back(r.head, u);
      if (b != r.head)
        edges.emplace_back(u, b);
    }
  }
  return Graph(next, std::move(edges), std::move(labels));
}

} // namespace klb
