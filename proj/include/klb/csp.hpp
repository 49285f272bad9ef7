#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "klb/error.hpp"
#include "klb/graph.hpp"

namespace klb {

using Tuple = std::vector<int>;

/// A scope (distinct variables) with the set of allowed value tuples.
struct Constraint {
  std::vector<int> scope;
  std::vector<Tuple> relation; // sorted, unique

  Constraint() = default;
  Constraint(std::vector<int> s, std::vector<Tuple> r) : scope(std::move(s)), relation(std::move(r)) {
    std::sort(relation.begin(), relation.end());
    relation.erase(std::unique(relation.begin(), relation.end()), relation.end());
  }

  bool allows(const Tuple &t) const { return std::binary_search(relation.begin(), relation.end(), t); }

  friend bool operator==(const Constraint &, const Constraint &) = default;
};

/// Constraint network (V, U, C) with V = 1..num_vars.
class ConstraintNetwork {
public:
  ConstraintNetwork() = default;
  ConstraintNetwork(int num_vars, std::vector<int> universe, std::vector<Constraint> constraints)
      : n_(num_vars), universe_(std::move(universe)), constraints_(std::move(constraints)) {
    if (n_ < 0)
      throw InvalidInput("negative variable count");
    std::sort(universe_.begin(), universe_.end());
    universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
    if (universe_.empty())
      throw InvalidInput("empty universe");
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
      const Constraint &c = constraints_[i];
      std::set<int> seen;
      for (int v : c.scope) {
        if (v < 1 || v > n_)
          throw InvalidInput("constraint " + std::to_string(i + 1) + ": undeclared variable " +
                             std::to_string(v));
        if (!seen.insert(v).second)
          throw InvalidInput("constraint " + std::to_string(i + 1) + ": repeated variable " +
                             std::to_string(v));
      }
      for (const Tuple &t : c.relation) {
        if (t.size() != c.scope.size())
          throw InvalidInput("constraint " + std::to_string(i + 1) + ": tuple arity mismatch");
        for (int x : t)
          if (!std::binary_search(universe_.begin(), universe_.end(), x))
            throw InvalidInput("constraint " + std::to_string(i + 1) + ": value " +
                               std::to_string(x) + " not in universe");
      }
    }
  }

  int num_vars() const noexcept { return n_; }
  const std::vector<int> &universe() const noexcept { return universe_; }
  const std::vector<Constraint> &constraints() const noexcept { return constraints_; }

  bool is_boolean() const { return universe_ == std::vector<int>{0, 1}; }

  /// True iff `values` (indexed by variable - 1) is a solution.
  bool is_solution(const std::vector<int> &values) const {
    if (values.size() != static_cast<std::size_t>(n_))
      return false;
    for (int x : values)
      if (!std::binary_search(universe_.begin(), universe_.end(), x))
        return false;
    Tuple t;
    for (const Constraint &c : constraints_) {
      t.clear();
      for (int v : c.scope)
        t.push_back(values[static_cast<std::size_t>(v - 1)]);
      if (!c.allows(t))
        return false;
    }
    return true;
  }

  friend bool operator==(const ConstraintNetwork &, const ConstraintNetwork &) = default;

private:
  int n_ = 0;
  std::vector<int> universe_;
  std::vector<Constraint> constraints_;
};

/// Vertices are the variables; two variables are adjacent iff they share a scope.
inline Graph constraint_graph(const ConstraintNetwork &net) {
  std::vector<Edge> edges;
  for (const Constraint &c : net.constraints())
    for (std::size_t a = 0; a < c.scope.size(); ++a)
      for (std::size_t b = a + 1; b < c.scope.size(); ++b)
        edges.emplace_back(c.scope[a], c.scope[b]);
  return Graph(net.num_vars(), std::move(edges));
}

} // namespace klb
