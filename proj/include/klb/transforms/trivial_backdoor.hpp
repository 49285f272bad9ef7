#pragma once

#include <numeric>
#include <vector>

#include "klb/cnf.hpp"
#include "klb/transforms/ppt.hpp"

namespace klb {

/// (F, n) -> (F, V): the whole variable set is a backdoor for any sub-solver.
inline PptOutput<CnfFormula, std::vector<int>> trivial_backdoor(const CnfFormula &f) {
  std::vector<int> all(static_cast<std::size_t>(f.num_vars()));
  std::iota(all.begin(), all.end(), 1);
  auto k = static_cast<long long>(all.size());
  return {f, std::move(all), k};
}

} // namespace klb
