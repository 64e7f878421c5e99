#pragma once

#include <vector>

#include "homomesy/poset.hpp"
#include "homomesy/words.hpp"

namespace homomesy {

/// Height profile of an ideal of [a] x [b], sampled at k = -a, ..., b.
struct HeightFunction {
  int a = 0;
  int b = 0;
  std::vector<int> values;

  int at(int k) const { return values.at(static_cast<std::size_t>(k + a)); }
  long long sum() const;
  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

// Toggles ------------------------------------------------------------------

/// I xor {x} if that is still an ideal, otherwise I. Throws std::out_of_range
/// for an unknown element.
OrderIdeal toggle(const Poset& p, const OrderIdeal& ideal, Poset::Element x);

// Rowmotion ----------------------------------------------------------------

/// Ideal generated by the minimal elements of the complement.
OrderIdeal rowmotion_ideal(const Poset& p, const OrderIdeal& ideal);

/// Product of all toggles along the lexicographically smallest linear
/// extension, applied from the top element down.
OrderIdeal rowmotion_ideal_by_toggles(const Poset& p, const OrderIdeal& ideal);

/// Rank-by-rank toggling, highest rank first.
OrderIdeal rowmotion_ideal_by_ranks(const GridPoset& p, const OrderIdeal& ideal);

/// Minimal elements of the complement of the ideal generated by A.
Antichain rowmotion_antichain(const Poset& p, const Antichain& antichain);

// Promotion ----------------------------------------------------------------

/// File toggles from file 1-a to file b-1; each file bottom to top.
OrderIdeal promotion_ideal(const GridPoset& p, const OrderIdeal& ideal);

/// maximal_elements . promotion_ideal . down_closure
Antichain promotion_antichain(const GridPoset& p, const Antichain& antichain);

// Encodings ----------------------------------------------------------------

/// h_I(k) = |k| + 2 #(I cap file k) for k in [-a, b].
HeightFunction height_function(const GridPoset& p, const OrderIdeal& ideal);

/// Letter i is h_I(i-a) - h_I(i-a-1), i = 1..a+b.
SignWord sign_word(const GridPoset& p, const OrderIdeal& ideal);

/// Inverse of sign_word. Throws std::invalid_argument unless the word has
/// exactly a minus letters and b plus letters.
OrderIdeal ideal_from_sign_word(const GridPoset& p, const SignWord& w);

/// Letter i (1-based) is +1 iff i <= a and A meets positive fiber i, or i > a
/// and A misses negative fiber i-a.
StanleyThomasWord stanley_thomas_word(const GridPoset& p, const Antichain& antichain);

/// Inverse of stanley_thomas_word. Throws std::invalid_argument unless the
/// word has length a+b with exactly a minus letters.
Antichain antichain_from_st_word(const GridPoset& p, const StanleyThomasWord& w);

}  // namespace homomesy
