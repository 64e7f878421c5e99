#include <doctest.h>

#include "homomesy/grid_systems.hpp"
#include "homomesy/linalg.hpp"
#include "oracles.hpp"

using namespace homomesy;

namespace {

// Homomesic subspace dimension for rowmotion on [a] x [b], indexed [a-1][b-1].
// Produced by oracle::homomesic_dimension (bitmask orbits, rank mod two primes)
// and frozen here.
constexpr int kIdealDimension[4][4] = {{1, 2, 3, 4}, {2, 3, 5, 6}, {3, 5, 7, 9}, {4, 6, 9, 11}};
constexpr int kAntichainDimension[4][4] = {{1, 2, 3, 4}, {2, 3, 5, 6}, {3, 5, 7, 9}, {4, 6, 9, 11}};

template <class Tag>
std::vector<RationalVector> subspace(const DynamicalSystem<ElementSubset<Tag>>& system, const GridPoset& p) {
  return homomesic_subspace(system.map, system.states, indicator_basis<Tag>(p));
}

Eigen::Index generator_rank(const std::vector<NamedGenerator>& gens, Eigen::Index n) {
  std::vector<RationalVector> vs;
  for (const auto& g : gens) vs.push_back(g.coefficients);
  return rational_rank(columns_matrix(vs, n));
}

}  // namespace

TEST_CASE("oracle reproduces the pinned dimensions") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      CHECK(oracle::homomesic_dimension(a, b, false) == kIdealDimension[a - 1][b - 1]);
      CHECK(oracle::homomesic_dimension(a, b, true) == kAntichainDimension[a - 1][b - 1]);
    }
  }
}

TEST_CASE("rowmotion subspaces contain the named generators, a, b <= 4") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const GridPoset p = build_grid_poset(a, b);
      const auto n = static_cast<Eigen::Index>(p.size());

      const auto ideal_kernel = subspace(grid_ideal_system(p, GridMap::Rowmotion), p);
      CHECK(static_cast<int>(ideal_kernel.size()) == kIdealDimension[a - 1][b - 1]);
      const auto ideal_gens = ideal_generators(p);
      for (const auto& g : ideal_gens) {
        CAPTURE(g.name);
        CHECK(in_span(ideal_kernel, g.coefficients));
      }
      // The generators span the whole subspace.
      CHECK(generator_rank(ideal_gens, n) == static_cast<Eigen::Index>(ideal_kernel.size()));

      const auto antichain_kernel = subspace(grid_antichain_system(p, GridMap::Rowmotion), p);
      CHECK(static_cast<int>(antichain_kernel.size()) == kAntichainDimension[a - 1][b - 1]);
      const auto antichain_gens = antichain_generators(p);
      for (const auto& g : antichain_gens) {
        CAPTURE(g.name);
        CHECK(in_span(antichain_kernel, g.coefficients));
      }
      CHECK(generator_rank(antichain_gens, n) == static_cast<Eigen::Index>(antichain_kernel.size()));
    }
  }
}

TEST_CASE("promotion on antichains: cardinality is outside the subspace") {
  const GridPoset p = build_grid_poset(3, 2);
  const auto kernel = subspace(grid_antichain_system(p, GridMap::Promotion), p);
  CHECK_FALSE(in_span(kernel, RationalVector::Ones(6)));
}
