#include "homomesy/gallery/permutations.hpp"

#include <algorithm>
#include <numeric>

namespace homomesy::gallery {

std::size_t permutation_inversions(const Permutation& p) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  }
  return inv;
}

Permutation reverse_permutation(const Permutation& p) { return Permutation(p.rbegin(), p.rend()); }

DynamicalSystem<Permutation> reversal_inversions_space(int n, std::size_t guard) {
  if (n < 1) throw std::invalid_argument("reversal_inversions_space: n must be at least 1");
  std::size_t count = 1;
  for (int i = 2; i <= n; ++i) {
    count *= static_cast<std::size_t>(i);
    if (count > guard) throw GuardExceeded(std::to_string(n) + "! permutations exceed guard of " + std::to_string(guard));
  }
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> states;
  states.reserve(count);
  do {
    states.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  DynamicalSystem<Permutation> system;
  system.space = "S_" + std::to_string(n);
  system.map_name = "reversal";
  system.states = std::move(states);
  system.map = reverse_permutation;
  system.statistics.push_back(scalar_statistic<Permutation>(
      "inversions", [](const Permutation& q) { return static_cast<std::int64_t>(permutation_inversions(q)); }));
  return system;
}

}  // namespace homomesy::gallery
