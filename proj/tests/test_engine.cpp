#include <doctest.h>

#include "homomesy/engine.hpp"
#include "homomesy/grid_systems.hpp"
#include "homomesy/gallery/word_systems.hpp"

using namespace homomesy;

namespace {

RationalVector scalar(Rational r) {
  RationalVector v(1);
  v(0) = std::move(r);
  return v;
}

auto left_shift = [](const SignWord& w) { return cyclic_shift(w, ShiftDirection::Left); };

}  // namespace

TEST_CASE("iterate_orbit") {
  const auto four = iterate_orbit(left_shift, SignWord::parse("0011"));
  CHECK(four.period() == 4);
  CHECK(four.representative().to_bits() == "0011");
  const auto two = iterate_orbit(left_shift, SignWord::parse("1010"));
  CHECK(two.period() == 2);
  CHECK(two.representative().to_bits() == "0101");
  CHECK(iterate_orbit([](int x) { return x; }, 7).period() == 1);
  CHECK_THROWS_AS(iterate_orbit([](int x) { return x + 1; }, 0, 100), GuardExceeded);
}

TEST_CASE("orbit_partition") {
  const GridPoset p = build_grid_poset(2, 2);
  const auto rowmotion = grid_ideal_system(p, GridMap::Rowmotion);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbit_partition(rowmotion.map, rowmotion.states)) sizes.push_back(o.period());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 4});

  const GridPoset q = build_grid_poset(3, 2);
  const auto promotion = grid_ideal_system(q, GridMap::Promotion);
  const auto orbits = orbit_partition(promotion.map, promotion.states);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].period() == 5);
  CHECK(orbits[1].period() == 5);
  CHECK(orbits[0].representative() < orbits[1].representative());

  const auto words = gallery::cyclic_inversions_space(2, 2);
  const auto word_orbits = orbit_partition(words.map, words.states);
  REQUIRE(word_orbits.size() == 2);
  CHECK(word_orbits[0].period() == 4);
  CHECK(word_orbits[1].period() == 2);

  for (const auto& o : orbit_partition(promotion.map, promotion.states)) {
    for (std::size_t i = 0; i < o.period(); ++i) CHECK(promotion.map(o.states[i]) == o.states[(i + 1) % o.period()]);
    CHECK(*std::min_element(o.states.begin(), o.states.end()) == o.representative());
  }
}

TEST_CASE("orbit_partition rejects non-closed or non-injective maps") {
  const std::vector<int> space = {0, 1, 2, 3};
  CHECK_THROWS_AS(orbit_partition([](int x) { return x + 1; }, space), ClosureViolation);
  CHECK_THROWS_AS(orbit_partition([](int x) { return x / 2; }, space), ClosureViolation);
  CHECK_THROWS_AS(orbit_partition([](int x) { return (x + 1) % 4; }, space, 2), GuardExceeded);
}

TEST_CASE("orbit averages") {
  const auto words = gallery::cyclic_inversions_space(2, 2);
  const auto& inv = words.statistic("inversions");
  const auto orbits = orbit_partition(words.map, words.states);
  CHECK(orbit_average(inv, orbits[0]) == scalar(2));
  CHECK(orbit_average(inv, orbits[1]) == scalar(2));

  const GridPoset p = build_grid_poset(3, 2);
  const auto antichains = grid_antichain_system(p, GridMap::Promotion);
  const auto a_orbits = orbit_partition(antichains.map, antichains.states);
  CHECK(orbit_average(antichains.statistic("antichain-size"), a_orbits[0]) == scalar(Rational(4, 5)));
}

TEST_CASE("check_homomesy") {
  const GridPoset p = build_grid_poset(3, 2);
  const auto ideals = grid_ideal_system(p, GridMap::Promotion);
  const auto report = check_homomesy(ideals.map, ideals.states, ideals.statistic("ideal-size"));
  CHECK(report.homomesic);
  CHECK(*report.c == scalar(3));
  CHECK(*report.global_average == scalar(3));

  const auto antichains = grid_antichain_system(p, GridMap::Promotion);
  const auto bad = check_homomesy(antichains.map, antichains.states, antichains.statistic("antichain-size"));
  CHECK_FALSE(bad.homomesic);
  CHECK_FALSE(bad.c.has_value());
  REQUIRE(bad.orbits.size() == 2);
  CHECK(bad.orbits[0].average == scalar(Rational(4, 5)));
  CHECK(bad.orbits[1].average == scalar(Rational(8, 5)));

  const GridPoset q = build_grid_poset(2, 2);
  const auto row = grid_antichain_system(q, GridMap::Rowmotion);
  CHECK(*check_homomesy(row.map, row.states, row.statistic("antichain-size")).c == scalar(1));

  const std::vector<int> empty;
  CHECK_THROWS_AS(check_homomesy([](int x) { return x; }, empty, scalar_statistic<int>("id", [](int x) { return std::int64_t{x}; })),
                  std::invalid_argument);
}

TEST_CASE("vector statistics are decided componentwise") {
  const std::vector<int> space = {0, 1, 2, 3};
  auto rot = [](int x) { return (x + 2) % 4; };
  const auto f = vector_statistic<int>("pair", 2, [](int x) {
    RationalVector v(2);
    v(0) = x % 2;  // constant on each orbit {0,2}, {1,3}: not homomesic
    v(1) = x < 2 ? 1 : 0;
    return v;
  });
  const auto report = check_homomesy(rot, space, f);
  CHECK_FALSE(report.homomesic);
  const auto g = vector_statistic<int>("pair", 2, [](int x) {
    RationalVector v(2);
    v(0) = x < 2 ? 1 : 0;
    v(1) = x == 0 || x == 3 ? 4 : 0;
    return v;
  });
  const auto ok = check_homomesy(rot, space, g);
  CHECK(ok.homomesic);
  CHECK(*ok.c == (RationalVector(2) << Rational(1, 2), 2).finished());
  CHECK_THROWS_AS(vector_statistic<int>("bad", 3, [](int) { return zero_vector(2); })(0), std::logic_error);
}

TEST_CASE("superorbits do not change averages") {
  const auto words = gallery::cyclic_inversions_space(3, 3);
  const auto& inv = words.statistic("inversions");
  for (const auto& o : orbit_partition(words.map, words.states)) {
    // Traverse the orbit until its length reaches a multiple of a+b.
    Orbit<SignWord> super;
    for (std::size_t m = 0; m < 6 / o.period(); ++m) super.states.insert(super.states.end(), o.states.begin(), o.states.end());
    CHECK(super.period() == 6);
    CHECK(orbit_average(inv, super) == orbit_average(inv, o));
  }
}

TEST_CASE("invariant plus 0-mesic decomposition") {
  const auto words = gallery::cyclic_inversions_space(2, 2);
  const auto& inv = words.statistic("inversions");
  const auto orbits = orbit_partition(words.map, words.states);
  const auto d = invariant_homomesic_decomposition(orbits, inv);
  for (const auto& s : words.states) {
    CHECK(d.invariant_part(s) == scalar(2));
    CHECK(d.invariant_part(s) + d.zero_mesic_part(s) == inv(s));
  }

  // An invariant statistic has zero 0-mesic part; a 0-mesic one has zero invariant part.
  const auto invariant = invariant_homomesic_decomposition(orbits, d.invariant_part);
  const auto zero = invariant_homomesic_decomposition(orbits, d.zero_mesic_part);
  for (const auto& s : words.states) {
    CHECK(invariant.zero_mesic_part(s).isZero());
    CHECK(zero.invariant_part(s).isZero());
  }
  CHECK_THROWS_AS(d.invariant_part(SignWord::parse("+++")), std::out_of_range);
}

TEST_CASE("homomesic_subspace basics") {
  const GridPoset p = build_grid_poset(3, 2);
  const auto ideals = grid_ideal_system(p, GridMap::Rowmotion);
  const auto basis = indicator_basis<OrderIdealTag>(p);
  const auto orbits = orbit_partition(ideals.map, ideals.states);
  const auto kernel = homomesic_subspace(orbits, basis);
  CHECK(kernel.size() == 5);
  for (const auto& v : kernel) {
    CHECK(check_homomesy(ideals.map, ideals.states, linear_combination(basis, v)).homomesic);
  }
  for (std::size_t x = 0; x < basis.size(); ++x) {
    const bool homomesic = check_homomesy(ideals.map, ideals.states, basis[x]).homomesic;
    CHECK(homomesic == in_span(kernel, RationalVector::Unit(6, static_cast<Eigen::Index>(x))));
  }
  CHECK_THROWS_AS(homomesic_subspace(orbits, std::vector<Statistic<OrderIdeal>>{}), std::invalid_argument);
  CHECK_THROWS_AS(linear_combination(basis, zero_vector(2)), std::invalid_argument);
}
