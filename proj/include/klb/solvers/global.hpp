#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "klb/caps.hpp"
#include "klb/error.hpp"
#include "klb/global_constraint.hpp"
#include "klb/result.hpp"

namespace klb {

/// Instantiation indexed by variable - 1.
using GlobalResult = Decision<std::vector<int>>;

namespace detail {

inline void check_global_cap(const GlobalConstraint &g, const OracleCaps &caps) {
  std::uint64_t product = 1;
  for (const auto &d : g.domains()) {
    if (product > caps.global_instantiations / d.size())
      throw CapExceeded("global_consistency: product of domain sizes exceeds cap");
    product *= d.size();
  }
}

// Exhaustive search over instantiations in lexicographic order (variable 1
// first, values ascending). Partial instantiations are abandoned only when no
// completion can be legal, so the first legal one found is the least.
class GlobalSearch {
public:
  explicit GlobalSearch(const GlobalConstraint &g)
      : g_(g), n_(g.num_vars()), values_(static_cast<std::size_t>(n_), 0) {}

  GlobalResult run() {
    if (search(1))
      return GlobalResult::yes(values_);
    return GlobalResult::no();
  }

private:
  int val(int v) const { return values_[static_cast<std::size_t>(v - 1)]; }

  // Can the first `upto` assigned variables still be completed?
  bool viable(int upto) const {
    switch (g_.kind()) {
    case GlobalKind::NValue: {
      std::set<int> used;
      int open = 0;
      for (int v : g_.x()) {
        if (v <= upto)
          used.insert(val(v));
        else
          ++open;
      }
      const int distinct = static_cast<int>(used.size());
      return distinct <= g_.n_value() && distinct + open >= g_.n_value();
    }
    case GlobalKind::Disjoint:
      for (int a : g_.x())
        for (int b : g_.y())
          if (a <= upto && b <= upto && val(a) == val(b))
            return false;
      return true;
    case GlobalKind::Uses: {
      std::set<int> reachable;
      for (int b : g_.y()) {
        if (b <= upto)
          reachable.insert(val(b));
        else
          reachable.insert(g_.domain(b).begin(), g_.domain(b).end());
      }
      return std::all_of(g_.x().begin(), g_.x().end(),
                         [&](int a) { return a > upto || reachable.count(val(a)) > 0; });
    }
    }
    return false;
  }

  bool search(int v) {
    if (v > n_)
      return g_.is_legal(values_);
    for (int d : g_.domain(v)) {
      values_[static_cast<std::size_t>(v - 1)] = d;
      if (viable(v) && search(v + 1))
        return true;
    }
    return false;
  }

  const GlobalConstraint &g_;
  int n_;
  std::vector<int> values_;
};

} // namespace detail

/// Consistency: does the constraint have a legal instantiation?
inline GlobalResult global_consistency(const GlobalConstraint &g, const OracleCaps &caps = {}) {
  detail::check_global_cap(g, caps);
  return detail::GlobalSearch(g).run();
}

/// Domain consistency by pinning: value d of x is supported iff the
/// constraint with dom(x) = {d} is consistent. Keys are variables 1..n.
inline std::map<int, std::vector<int>> global_domain_consistent(const GlobalConstraint &g,
                                                                const OracleCaps &caps = {}) {
  detail::check_global_cap(g, caps);
  std::map<int, std::vector<int>> support;
  for (int v = 1; v <= g.num_vars(); ++v) {
    auto &s = support[v];
    for (int d : g.domain(v))
      if (global_consistency(g.pinned(v, d), caps).satisfiable)
        s.push_back(d);
  }
  return support;
}

} // namespace klb
