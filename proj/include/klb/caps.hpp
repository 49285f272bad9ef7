#pragma once

#include <cstdint>

namespace klb {

/// Size limits for the exhaustive oracles. These bound the harness running
/// time only; they never change an answer.
struct OracleCaps {
  int sat_vars = 24;
  std::uint64_t csp_assignments = std::uint64_t{1} << 20; // |U|^|V|
  std::uint64_t global_instantiations = std::uint64_t{1} << 36; // product of domain sizes
  int bn_nodes = 16;
  int atoms = 16;
  int backdoor_size = 20;
};

} // namespace klb
