#pragma once

#include <vector>

#include "homomesy/engine.hpp"

namespace homomesy::gallery {

/// One-line notation over 1..n.
using Permutation = std::vector<int>;

std::size_t permutation_inversions(const Permutation& p);
Permutation reverse_permutation(const Permutation& p);

/// All permutations of [n] under reversal, with the "inversions" statistic.
/// Throws std::invalid_argument for n < 1 and GuardExceeded when n! > guard.
DynamicalSystem<Permutation> reversal_inversions_space(int n, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace homomesy::gallery
