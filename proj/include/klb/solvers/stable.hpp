#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "klb/caps.hpp"
#include "klb/error.hpp"
#include "klb/logic_program.hpp"
#include "klb/result.hpp"

namespace klb {

/// A stable model as the ascending list of its atoms.
using StableResult = Decision<std::vector<int>>;

/// Least model of a positive program: smallest atom set closed under every rule.
inline std::vector<int> least_model(const LogicProgram &p) {
  if (!p.is_positive())
    throw InvalidInput("least_model: program has negative body atoms");
  std::vector<bool> in(static_cast<std::size_t>(p.num_atoms()) + 1, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule &r : p.rules()) {
      if (in[static_cast<std::size_t>(r.head)])
        continue;
      if (std::all_of(r.pos.begin(), r.pos.end(), [&](int a) { return in[static_cast<std::size_t>(a)]; })) {
        in[static_cast<std::size_t>(r.head)] = true;
        changed = true;
      }
    }
  }
  std::vector<int> model;
  for (int a = 1; a <= p.num_atoms(); ++a)
    if (in[static_cast<std::size_t>(a)])
      model.push_back(a);
  return model;
}

/// I is stable iff it equals the least model of the reduct P^I.
inline bool is_stable_model(const LogicProgram &p, const std::vector<int> &interpretation) {
  std::vector<int> sorted = interpretation;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return least_model(gf_reduct(p, sorted)) == sorted;
}

/// Enumerates every atom subset, atom 1 most significant and "in" before
/// "out", and reports the first stable model in that order.
inline StableResult stable_model_brute(const LogicProgram &p, const OracleCaps &caps = {}) {
  const int n = p.num_atoms();
  if (n > caps.atoms || n > 62)
    throw CapExceeded("stable_model_brute: " + std::to_string(n) + " atoms exceed cap " +
                      std::to_string(caps.atoms));
  // Bitmask fixpoint; atom a lives at bit a - 1.
  struct MaskRule {
    int head;
    std::uint64_t pos, neg;
  };
  std::vector<MaskRule> rules;
  for (const Rule &r : p.rules()) {
    MaskRule m{r.head - 1, 0, 0};
    for (int a : r.pos)
      m.pos |= std::uint64_t{1} << (a - 1);
    for (int b : r.neg)
      m.neg |= std::uint64_t{1} << (b - 1);
    rules.push_back(m);
  }
  const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t interp = 0;
    for (int a = 1; a <= n; ++a)
      if (!((code >> (n - a)) & 1u))
        interp |= std::uint64_t{1} << (a - 1);
    interp &= full;
    std::uint64_t model = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const MaskRule &r : rules) {
        if ((r.neg & interp) || (model >> r.head & 1u) || (r.pos & ~model))
          continue;
        model |= std::uint64_t{1} << r.head;
        changed = true;
      }
      if (model & ~interp)
        break;
    }
    if (model == interp) {
      std::vector<int> atoms;
      for (int a = 1; a <= n; ++a)
        if (interp >> (a - 1) & 1u)
          atoms.push_back(a);
      return StableResult::yes(std::move(atoms));
    }
  }
  return StableResult::no();
}

} // namespace klb
