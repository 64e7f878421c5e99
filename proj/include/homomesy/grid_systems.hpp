#pragma once

// The [a] x [b] dynamics packaged as DynamicalSystem values, with the
// indicator basis and the named generators used by subspace searches.

#include <string>
#include <vector>

#include "homomesy/chain_dynamics.hpp"
#include "homomesy/engine.hpp"

namespace homomesy {

enum class GridMap { Rowmotion, Promotion };

std::string grid_label(const GridPoset& p);

/// J([a] x [b]) with statistics "ideal-size", "file:<f>" and "indicator:<k>,<l>".
DynamicalSystem<OrderIdeal> grid_ideal_system(const GridPoset& p, GridMap map,
                                              std::size_t guard = kDefaultEnumerationGuard);

/// A([a] x [b]) with statistics "antichain-size", "positive-fiber:<k>",
/// "negative-fiber:<l>" and "indicator:<k>,<l>".
DynamicalSystem<Antichain> grid_antichain_system(const GridPoset& p, GridMap map,
                                                 std::size_t guard = kDefaultEnumerationGuard);

/// 1_x for every element x, in element order.
template <class Tag>
std::vector<Statistic<ElementSubset<Tag>>> indicator_basis(const GridPoset& p) {
  std::vector<Statistic<ElementSubset<Tag>>> basis;
  for (Poset::Element x = 0; x < p.size(); ++x) {
    const GridElement e = p.coords(x);
    basis.push_back(scalar_statistic<ElementSubset<Tag>>(
        "indicator:" + std::to_string(e.k) + "," + std::to_string(e.l),
        [x](const ElementSubset<Tag>& s) { return std::int64_t{s.contains(x)}; }));
  }
  return basis;
}

/// Coefficient vector over the indicator basis, with a descriptive name.
struct NamedGenerator {
  std::string name;
  RationalVector coefficients;
};

/// File sums and opposite-pair sums 1_x + 1_y (x before y, or x = y at the
/// centre of an odd-by-odd grid).
std::vector<NamedGenerator> ideal_generators(const GridPoset& p);

/// Positive and negative fiber sums and opposite-pair differences 1_x - 1_y.
std::vector<NamedGenerator> antichain_generators(const GridPoset& p);

}  // namespace homomesy
