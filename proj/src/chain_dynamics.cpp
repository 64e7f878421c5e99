#include "homomesy/chain_dynamics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace homomesy {

long long HeightFunction::sum() const { return std::accumulate(values.begin(), values.end(), 0LL); }

namespace {

void toggle_in_place(const Poset& p, ElementSet& members, Poset::Element x) {
  if (members.test(x)) {
    for (auto y : p.upper_covers(x)) {
      if (members.test(y)) return;
    }
  } else {
    for (auto y : p.lower_covers(x)) {
      if (!members.test(y)) return;
    }
  }
  members.flip(x);
}

void check_word_shape(const GridPoset& p, std::size_t size, std::size_t minus, const char* what) {
  const auto n = static_cast<std::size_t>(p.a() + p.b());
  if (size != n || minus != static_cast<std::size_t>(p.a())) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(p.a()) + " minus and " +
                                std::to_string(p.b()) + " plus letters");
  }
}

}  // namespace

OrderIdeal toggle(const Poset& p, const OrderIdeal& ideal, Poset::Element x) {
  if (x >= p.size()) throw std::out_of_range("toggle: unknown element " + std::to_string(x));
  ElementSet members = ideal.members();
  toggle_in_place(p, members, x);
  return OrderIdeal(std::move(members));
}

OrderIdeal rowmotion_ideal(const Poset& p, const OrderIdeal& ideal) {
  return down_closure(p, minimal_elements_of_complement(p, ideal));
}

OrderIdeal rowmotion_ideal_by_toggles(const Poset& p, const OrderIdeal& ideal) {
  ElementSet members = ideal.members();
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) toggle_in_place(p, members, *it);
  return OrderIdeal(std::move(members));
}

OrderIdeal rowmotion_ideal_by_ranks(const GridPoset& p, const OrderIdeal& ideal) {
  ElementSet members = ideal.members();
  for (int r = p.a() + p.b() - 2; r >= 0; --r) {
    for (Poset::Element x = 0; x < p.size(); ++x) {
      if (p.rank(x) == r) toggle_in_place(p, members, x);
    }
  }
  return OrderIdeal(std::move(members));
}

Antichain rowmotion_antichain(const Poset& p, const Antichain& antichain) {
  return minimal_elements_of_complement(p, down_closure(p, antichain));
}

OrderIdeal promotion_ideal(const GridPoset& p, const OrderIdeal& ideal) {
  ElementSet members = ideal.members();
  for (int f = 1 - p.a(); f <= p.b() - 1; ++f) {
    for (int k = std::max(1, 1 - f); k <= std::min(p.a(), p.b() - f); ++k) {
      toggle_in_place(p, members, p.index(k, k + f));
    }
  }
  return OrderIdeal(std::move(members));
}

Antichain promotion_antichain(const GridPoset& p, const Antichain& antichain) {
  return maximal_elements(p, promotion_ideal(p, down_closure(p, antichain)));
}

HeightFunction height_function(const GridPoset& p, const OrderIdeal& ideal) {
  HeightFunction h{p.a(), p.b(), std::vector<int>(static_cast<std::size_t>(p.a() + p.b() + 1))};
  for (int k = -p.a(); k <= p.b(); ++k) h.values[static_cast<std::size_t>(k + p.a())] = std::abs(k);
  ideal.members().for_each([&](std::size_t x) { h.values[static_cast<std::size_t>(p.file(x) + p.a())] += 2; });
  return h;
}

SignWord sign_word(const GridPoset& p, const OrderIdeal& ideal) {
  const HeightFunction h = height_function(p, ideal);
  std::vector<std::int8_t> letters;
  letters.reserve(h.values.size() - 1);
  for (std::size_t i = 1; i < h.values.size(); ++i) {
    letters.push_back(static_cast<std::int8_t>(h.values[i] - h.values[i - 1]));
  }
  return SignWord(std::move(letters));
}

OrderIdeal ideal_from_sign_word(const GridPoset& p, const SignWord& w) {
  check_word_shape(p, w.size(), w.count_minus(), "ideal_from_sign_word");
  ElementSet members(p.size());
  int height = p.a();
  for (int f = 1 - p.a(); f <= p.b() - 1; ++f) {
    height += w[static_cast<std::size_t>(f + p.a() - 1)];
    const int in_file = (height - std::abs(f)) / 2;
    const int k_low = std::max(1, 1 - f);
    for (int k = k_low; k < k_low + in_file; ++k) members.set(p.index(k, k + f));
  }
  return OrderIdeal(std::move(members));
}

StanleyThomasWord stanley_thomas_word(const GridPoset& p, const Antichain& antichain) {
  std::vector<bool> positive_hit(static_cast<std::size_t>(p.a()) + 1, false);
  std::vector<bool> negative_hit(static_cast<std::size_t>(p.b()) + 1, false);
  antichain.members().for_each([&](std::size_t x) {
    const GridElement e = p.coords(x);
    positive_hit[static_cast<std::size_t>(e.k)] = true;
    negative_hit[static_cast<std::size_t>(e.l)] = true;
  });
  std::vector<std::int8_t> letters;
  for (int i = 1; i <= p.a(); ++i) letters.push_back(positive_hit[static_cast<std::size_t>(i)] ? 1 : -1);
  for (int j = 1; j <= p.b(); ++j) letters.push_back(negative_hit[static_cast<std::size_t>(j)] ? -1 : 1);
  return StanleyThomasWord(std::move(letters));
}

Antichain antichain_from_st_word(const GridPoset& p, const StanleyThomasWord& w) {
  check_word_shape(p, w.size(), w.count_minus(), "antichain_from_st_word");
  std::vector<int> rows;     // positive fibers met, ascending
  std::vector<int> columns;  // negative fibers met, ascending
  for (int i = 1; i <= p.a(); ++i) {
    if (w[static_cast<std::size_t>(i - 1)] > 0) rows.push_back(i);
  }
  for (int j = 1; j <= p.b(); ++j) {
    if (w[static_cast<std::size_t>(p.a() + j - 1)] < 0) columns.push_back(j);
  }
  // Ascending rows against descending columns is the only antichain pairing.
  ElementSet members(p.size());
  for (std::size_t t = 0; t < rows.size(); ++t) members.set(p.index(rows[t], columns[columns.size() - 1 - t]));
  return Antichain(std::move(members));
}

}  // namespace homomesy
