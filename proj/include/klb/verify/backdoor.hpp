#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "klb/caps.hpp"
#include "klb/cnf.hpp"
#include "klb/error.hpp"
#include "klb/solvers/sat.hpp"
#include "klb/verify/report.hpp"

namespace klb::verify {

/// Strong backdoor check: the sub-solver must accept F[tau] for all 2^|B|
/// assignments tau of B.
inline VerificationReport check_backdoor(const CnfFormula &f, std::vector<int> backdoor,
                                         SubSolverKind kind, const OracleCaps &caps = {}) {
  VerificationReport rep;
  rep.subject = to_string(kind) + " backdoor";
  std::sort(backdoor.begin(), backdoor.end());
  backdoor.erase(std::unique(backdoor.begin(), backdoor.end()), backdoor.end());
  if (static_cast<int>(backdoor.size()) > caps.backdoor_size)
    throw CapExceeded("check_backdoor: |B| = " + std::to_string(backdoor.size()) + " exceeds cap");
  const bool known = std::all_of(backdoor.begin(), backdoor.end(),
                                 [&](int v) { return v >= 1 && v <= f.num_vars(); });
  rep.add("members are variables", known);
  long long rejected = 0;
  std::string first;
  if (known) {
    for_each_assignment(backdoor, [&](const PartialAssignment &tau) {
      if (subsolver_run(kind, apply_assignment(f, tau)).outcome == SubSolverOutcome::Rejected) {
        if (!rejected++) {
          for (const auto &[v, b] : tau)
            first += (first.empty() ? "" : " ") + std::to_string(b ? v : -v);
          first = "rejected under {" + first + "}";
        }
      }
      return true;
    });
  }
  rep.add("every restriction accepted", known && rejected == 0, first);
  rep.params["k"] = static_cast<long long>(backdoor.size());
  rep.params["rejected restrictions"] = rejected;
  return rep;
}

} // namespace klb::verify
