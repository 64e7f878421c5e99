#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homomesy {

/// Default bound on the size of any materialized state space.
inline constexpr std::size_t kDefaultEnumerationGuard = 10'000'000;

/// Default bound on the number of map applications spent closing one orbit.
inline constexpr std::size_t kDefaultOrbitGuard = 1'000'000;

/// A configured size or step budget was exceeded. Distinct from contract
/// violations so callers (the CLI in particular) can report it separately.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A map sent a state outside the supplied state space, or failed to act as a
/// bijection on it.
class ClosureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homomesy
