#pragma once

#include "homomesy/engine.hpp"
#include "homomesy/words.hpp"

namespace homomesy::gallery {

/// 1 iff every proper and full prefix sum of w is positive.
bool ballot_indicator(const SignWord& w);

/// Words with a letters -1 and b letters +1 under the leftward cyclic shift.
/// Statistics: "ballot" (the prefix-positivity indicator) and "inversions".
/// Throws std::invalid_argument unless a, b >= 0 and a + b >= 1.
DynamicalSystem<SignWord> ballot_space(int a, int b, std::size_t guard = kDefaultEnumerationGuard);

/// Same words and map as ballot_space, with only the "inversions" statistic.
DynamicalSystem<SignWord> cyclic_inversions_space(int a, int b, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace homomesy::gallery
