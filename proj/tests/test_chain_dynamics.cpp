#include <doctest.h>

#include "homomesy/chain_dynamics.hpp"
#include "oracles.hpp"

using namespace homomesy;

namespace {

ElementSet elements(const GridPoset& p, std::initializer_list<GridElement> xs) {
  ElementSet s(p.size());
  for (auto e : xs) s.set(p.index(e));
  return s;
}

OrderIdeal ideal_of(const GridPoset& p, const char* word) { return ideal_from_sign_word(p, SignWord::parse(word)); }

}  // namespace

TEST_CASE("toggle examples") {
  const GridPoset p = build_grid_poset(2, 2);
  const OrderIdeal empty(ElementSet(p.size()));
  const OrderIdeal bottom(elements(p, {{1, 1}}));
  CHECK(toggle(p, empty, p.index(1, 1)) == bottom);
  CHECK(toggle(p, bottom, p.index(1, 1)) == empty);
  CHECK(toggle(p, empty, p.index(1, 2)) == empty);
  CHECK_THROWS_AS(toggle(p, empty, 4), std::out_of_range);
}

TEST_CASE("toggles are involutions for a, b <= 4") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const GridPoset p = build_grid_poset(a, b);
      for (const auto& i : enumerate_order_ideals(p)) {
        for (Poset::Element x = 0; x < p.size(); ++x) CHECK(toggle(p, toggle(p, i, x), x) == i);
      }
    }
  }
}

TEST_CASE("toggles at non-covering elements commute on [3]x[3]") {
  const GridPoset p = build_grid_poset(3, 3);
  const auto ideals = enumerate_order_ideals(p);
  for (Poset::Element x = 0; x < p.size(); ++x) {
    for (Poset::Element y = 0; y < p.size(); ++y) {
      const auto& ux = p.upper_covers(x);
      const auto& uy = p.upper_covers(y);
      if (std::find(ux.begin(), ux.end(), y) != ux.end() || std::find(uy.begin(), uy.end(), x) != uy.end()) continue;
      for (const auto& i : ideals) CHECK(toggle(p, toggle(p, i, x), y) == toggle(p, toggle(p, i, y), x));
    }
  }
}

TEST_CASE("rowmotion examples") {
  const GridPoset p = build_grid_poset(4, 2);
  CHECK(sign_word(p, rowmotion_ideal(p, ideal_of(p, "--+--+"))).to_string() == "-+--+-");
  CHECK(rowmotion_ideal(p, OrderIdeal(ElementSet::full(p.size()))).cardinality() == 0);

  const char* rows[] = {"--+--+", "-+--+-", "+--+--", "-++---", "+----+", "---++-"};
  OrderIdeal i = down_closure(p, elements(p, {{2, 1}}));
  for (const char* w : rows) {
    CHECK(sign_word(p, i).to_string() == w);
    i = rowmotion_ideal(p, i);
  }
  CHECK(i == down_closure(p, elements(p, {{2, 1}})));

  const GridPoset big = build_grid_poset(7, 5);
  CHECK(rowmotion_antichain(big, Antichain(elements(big, {{1, 5}, {5, 3}, {6, 2}}))).members() ==
        elements(big, {{2, 4}, {6, 3}, {7, 1}}));
  CHECK(rowmotion_antichain(big, Antichain(ElementSet(big.size()))).members() == elements(big, {{1, 1}}));
  const GridPoset two = build_grid_poset(2, 2);
  CHECK(rowmotion_antichain(two, Antichain(elements(two, {{2, 2}}))).cardinality() == 0);
}

TEST_CASE("promotion examples") {
  const GridPoset p = build_grid_poset(3, 2);
  const OrderIdeal empty(ElementSet(p.size()));
  CHECK(sign_word(p, empty).to_string() == "---++");
  CHECK(sign_word(p, promotion_ideal(p, empty)).to_string() == "--++-");
  for (const auto& i : enumerate_order_ideals(p)) {
    OrderIdeal j = i;
    for (int t = 0; t < 5; ++t) j = promotion_ideal(p, j);
    CHECK(j == i);
  }
  const OrderIdeal full(ElementSet::full(p.size()));
  CHECK(sign_word(p, full).to_string() == "++---");
  CHECK(sign_word(p, promotion_ideal(p, full)).to_string() == "+---+");
  const GridPoset q = build_grid_poset(2, 3);
  const OrderIdeal top(ElementSet::full(q.size()));
  CHECK(sign_word(q, top).to_string() == "+++--");
  CHECK(sign_word(q, promotion_ideal(q, top)).to_string() == "++--+");
}

TEST_CASE("sign words and height functions") {
  const GridPoset p = build_grid_poset(3, 2);
  const OrderIdeal empty(ElementSet(p.size()));
  const OrderIdeal full(ElementSet::full(p.size()));
  CHECK(sign_word(p, full).to_string() == "++---");
  CHECK(height_function(p, empty).values == std::vector<int>{3, 2, 1, 0, 1, 2});
  CHECK(height_function(p, empty).sum() == 9);
  CHECK(height_function(p, full).sum() == 21);

  const GridPoset q = build_grid_poset(4, 2);
  CHECK(sign_word(q, down_closure(q, elements(q, {{2, 1}}))).to_string() == "--+--+");

  CHECK_THROWS_AS(ideal_from_sign_word(p, SignWord::parse("--++")), std::invalid_argument);
  CHECK_THROWS_AS(ideal_from_sign_word(p, SignWord::parse("--+++")), std::invalid_argument);
}

TEST_CASE("Stanley-Thomas words") {
  const GridPoset big = build_grid_poset(7, 5);
  const Antichain a(elements(big, {{1, 5}, {5, 3}, {6, 2}}));
  CHECK(stanley_thomas_word(big, a) == StanleyThomasWord::parse("+---++-|+--+-"));
  CHECK(stanley_thomas_word(big, rowmotion_antichain(big, a)) == StanleyThomasWord::parse("-+---++|-+--+"));
  CHECK(antichain_from_st_word(big, StanleyThomasWord::parse("+---++-|+--+-")) == a);

  const GridPoset p = build_grid_poset(3, 4);
  CHECK(stanley_thomas_word(p, Antichain(ElementSet(p.size()))).to_string() == "---++++");
  CHECK_THROWS_AS(antichain_from_st_word(p, StanleyThomasWord::parse("--++++")), std::invalid_argument);
}

TEST_CASE("word parsing and shifts") {
  CHECK(SignWord::parse("\xE2\x88\x92+\xE2\x88\x92") == SignWord{-1, 1, -1});
  CHECK(SignWord::parse("0011").to_string() == "--++");
  CHECK_THROWS_AS(SignWord::parse("+x"), std::invalid_argument);
  CHECK_THROWS_AS(SignWord({0, 1}), std::invalid_argument);

  CHECK(cyclic_shift(SignWord::parse("0011"), ShiftDirection::Left).to_bits() == "0110");
  CHECK(cyclic_shift(SignWord::parse("1010"), ShiftDirection::Left).to_bits() == "0101");
  const SignWord w = SignWord::parse("+--+-++");
  CHECK(cyclic_shift(cyclic_shift(w, ShiftDirection::Left), ShiftDirection::Right) == w);
  CHECK_THROWS_AS(cyclic_shift(SignWord{}, ShiftDirection::Left), std::invalid_argument);
}

TEST_CASE("block-gap reversal") {
  CHECK(block_gap_reversal(SignWord{-1, 1, 1, -1, -1, -1, 1, 1}) == SignWord{1, -1, -1, -1, 1, 1, -1, 1});
  CHECK(block_gap_reversal(SignWord{-1, -1, -1}) == SignWord{-1, -1, -1});
  CHECK(block_gap_reversal(SignWord{-1, 1}) == SignWord{1, -1});
  CHECK(block_gap_reversal(SignWord{}) == SignWord{});

  // Against the run-swap description on every word of length <= 10.
  for (int len = 1; len <= 10; ++len) {
    for (int minus = 0; minus <= len; ++minus) {
      for (const auto& w : enumerate_words(minus, len - minus, 1 << 12)) {
        CHECK(block_gap_reversal(w).to_string() == oracle::block_gap_by_runs(w.to_string()));
      }
    }
  }
}

TEST_CASE("equivariance and height identity for a, b <= 5") {
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const GridPoset p = build_grid_poset(a, b);
      for (const auto& i : enumerate_order_ideals(p)) {
        const SignWord w = sign_word(p, i);
        CHECK(ideal_from_sign_word(p, w) == i);
        CHECK(sign_word(p, promotion_ideal(p, i)) == cyclic_shift(w, ShiftDirection::Left));
        const OrderIdeal r = rowmotion_ideal(p, i);
        CHECK(sign_word(p, r) == block_gap_reversal(w));
        CHECK(rowmotion_ideal_by_toggles(p, i) == r);
        CHECK(rowmotion_ideal_by_ranks(p, i) == r);
        CHECK(maximal_elements(p, r) == rowmotion_antichain(p, maximal_elements(p, i)));

        const HeightFunction h = height_function(p, i);
        CHECK(h.at(-a) == a);
        CHECK(h.at(b) == b);
        for (int k = -a; k <= b; ++k) CHECK(h.at(k) >= std::abs(k));
        CHECK(h.sum() - a * (a + 1) / 2 - b * (b + 1) / 2 == 2 * static_cast<long long>(i.cardinality()));
      }
      for (const auto& x : enumerate_antichains(p)) {
        const StanleyThomasWord w = stanley_thomas_word(p, x);
        CHECK(antichain_from_st_word(p, w) == x);
        CHECK(w.count_minus() == static_cast<std::size_t>(a));
        CHECK(stanley_thomas_word(p, rowmotion_antichain(p, x)) == cyclic_shift(w, ShiftDirection::Right));
      }
    }
  }
}

TEST_CASE("rowmotion on a generic poset") {
  // Rowmotion has order 3 on the three-element chain plus the empty ideal: 4.
  const Poset chain(3, {{0, 1}, {1, 2}});
  OrderIdeal i(ElementSet(3));
  for (int t = 0; t < 4; ++t) i = rowmotion_ideal(chain, i);
  CHECK(i == OrderIdeal(ElementSet(3)));

  const Poset diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  for (const auto& j : enumerate_order_ideals(diamond)) CHECK(rowmotion_ideal_by_toggles(diamond, j) == rowmotion_ideal(diamond, j));
}
