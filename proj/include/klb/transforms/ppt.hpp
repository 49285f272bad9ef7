#pragma once

namespace klb {

/// Result of a polynomial parameter transformation: the produced instance,
/// the structure that certifies its parameter, and the parameter value k'.
template <class Instance, class Certificate>
struct PptOutput {
  Instance instance;
  Certificate certificate;
  long long param_value = 0;
};

} // namespace klb
