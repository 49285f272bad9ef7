#pragma once

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "klb/error.hpp"

namespace klb {

enum class GlobalKind { NValue, Disjoint, Uses };

inline std::string to_string(GlobalKind k) {
  switch (k) {
  case GlobalKind::NValue:
    return "nvalue";
  case GlobalKind::Disjoint:
    return "disjoint";
  case GlobalKind::Uses:
    return "uses";
  }
  return "?";
}

inline GlobalKind global_kind_from_string(const std::string &s) {
  if (s == "nvalue")
    return GlobalKind::NValue;
  if (s == "disjoint")
    return GlobalKind::Disjoint;
  if (s == "uses")
    return GlobalKind::Uses;
  throw InvalidInput("unknown global constraint kind '" + s + "'");
}

/// An NValue, Disjoint or Uses constraint. Variables are 1..size(names), each
/// with a nonempty finite integer domain.
class GlobalConstraint {
public:
  GlobalConstraint() = default;
  GlobalConstraint(GlobalKind kind, std::vector<std::string> names,
                   std::vector<std::vector<int>> domains, std::vector<int> x, std::vector<int> y,
                   int n_value = 0)
      : kind_(kind), names_(std::move(names)), domains_(std::move(domains)), x_(std::move(x)),
        y_(std::move(y)), n_(n_value) {
    if (names_.size() != domains_.size())
      throw InvalidInput("every variable needs a domain");
    for (auto &d : domains_) {
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      if (d.empty())
        throw InvalidInput("empty domain");
    }
    std::set<int> xs;
    for (int v : x_) {
      check_var(v);
      if (!xs.insert(v).second)
        throw InvalidInput("variable listed twice in X");
    }
    std::set<int> ys;
    for (int v : y_) {
      check_var(v);
      if (!ys.insert(v).second)
        throw InvalidInput("variable listed twice in Y");
      if (xs.count(v))
        throw InvalidInput("X and Y must be disjoint");
    }
    if (kind_ == GlobalKind::NValue) {
      if (!y_.empty())
        throw InvalidInput("NValue takes no Y variables");
      if (n_ < 1)
        throw InvalidInput("NValue requires N >= 1");
    }
  }

  GlobalKind kind() const noexcept { return kind_; }
  int num_vars() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  const std::string &name(int v) const { return names_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<std::vector<int>> &domains() const noexcept { return domains_; }
  const std::vector<int> &domain(int v) const { return domains_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int> &x() const noexcept { return x_; }
  const std::vector<int> &y() const noexcept { return y_; }
  int n_value() const noexcept { return n_; }

  /// Copy with dom(v) replaced by {value}.
  GlobalConstraint pinned(int v, int value) const {
    GlobalConstraint g = *this;
    check_var(v);
    g.domains_[static_cast<std::size_t>(v - 1)] = {value};
    return g;
  }

  /// dom(S) = union of the domains of S.
  std::set<int> domain_union(const std::vector<int> &vars) const {
    std::set<int> u;
    for (int v : vars)
      u.insert(domain(v).begin(), domain(v).end());
    return u;
  }

  int dx() const { return static_cast<int>(domain_union(x_).size()); }
  int dy() const { return static_cast<int>(domain_union(y_).size()); }
  int dxy() const {
    auto a = domain_union(x_), b = domain_union(y_);
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return static_cast<int>(both.size());
  }

  /// Legality of a full instantiation (values indexed by variable - 1).
  bool is_legal(const std::vector<int> &values) const {
    if (values.size() != names_.size())
      return false;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (!std::binary_search(domains_[i].begin(), domains_[i].end(), values[i]))
        return false;
    auto val = [&](int v) { return values[static_cast<std::size_t>(v - 1)]; };
    switch (kind_) {
    case GlobalKind::NValue: {
      std::set<int> used;
      for (int v : x_)
        used.insert(val(v));
      return static_cast<int>(used.size()) == n_;
    }
    case GlobalKind::Disjoint:
      for (int a : x_)
        for (int b : y_)
          if (val(a) == val(b))
            return false;
      return true;
    case GlobalKind::Uses: {
      std::set<int> ys;
      for (int v : y_)
        ys.insert(val(v));
      return std::all_of(x_.begin(), x_.end(), [&](int v) { return ys.count(val(v)) > 0; });
    }
    }
    return false;
  }

  friend bool operator==(const GlobalConstraint &, const GlobalConstraint &) = default;

private:
  void check_var(int v) const {
    if (v < 1 || v > num_vars())
      throw InvalidInput("undeclared variable " + std::to_string(v));
  }

  GlobalKind kind_ = GlobalKind::NValue;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> domains_;
  std::vector<int> x_;
  std::vector<int> y_;
  int n_ = 0;
};

} // namespace klb
