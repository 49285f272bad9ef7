#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace klb::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of a structural or semantic check. Every check is always run, so a
/// failing report lists all violated conditions, not just the first.
struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  std::map<std::string, long long> params;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }

  const Check *find(const std::string &name) const {
    for (const Check &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }
};

inline std::ostream &operator<<(std::ostream &os, const VerificationReport &r) {
  os << r.subject << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const Check &c : r.checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty())
      os << " - " << c.detail;
    os << '\n';
  }
  for (const auto &[k, v] : r.params)
    os << "  " << k << " = " << v << '\n';
  return os;
}

} // namespace klb::verify
