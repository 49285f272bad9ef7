#pragma once

#include <optional>

namespace klb {

/// Yes/no answer of a decision procedure, with a witness on "yes".
template <class Witness>
struct Decision {
  bool satisfiable = false;
  std::optional<Witness> witness;

  static Decision yes(Witness w) { return {true, std::move(w)}; }
  static Decision no() { return {false, std::nullopt}; }

  explicit operator bool() const noexcept { return satisfiable; }
};

} // namespace klb
