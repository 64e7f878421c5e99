#include "homomesy/words.hpp"

#include <algorithm>

#include "homomesy/errors.hpp"
#include "homomesy/poset.hpp"

namespace homomesy {

SignWord block_gap_reversal(const SignWord& w) {
  const auto& in = w.letters();
  const std::size_t n = in.size();
  std::vector<std::int8_t> out(in);

  auto starts_block = [&](std::size_t i) { return i + 1 < n && in[i] < 0 && in[i + 1] > 0; };

  std::size_t i = 0;
  while (i < n) {
    std::size_t end = i;
    if (starts_block(i)) {
      end = i + 2;
    } else {
      while (end < n && in[end] > 0) ++end;
      while (end < n && in[end] < 0 && !starts_block(end)) ++end;
    }
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(i), out.begin() + static_cast<std::ptrdiff_t>(end));
    i = end;
  }
  return SignWord(std::move(out));
}

std::vector<SignWord> enumerate_words(int minus, int plus, std::size_t guard) {
  if (minus < 0 || plus < 0) throw std::invalid_argument("letter counts must be nonnegative");
  const auto count = binomial_saturating(static_cast<std::size_t>(minus + plus), static_cast<std::size_t>(minus));
  if (count > guard) {
    throw GuardExceeded(std::to_string(count) + " words exceed guard of " + std::to_string(guard));
  }
  std::vector<std::int8_t> letters(static_cast<std::size_t>(minus), -1);
  letters.resize(static_cast<std::size_t>(minus + plus), 1);
  std::vector<SignWord> out;
  out.reserve(count);
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::size_t inversions(const SignWord& w) {
  std::size_t pluses_seen = 0;
  std::size_t inv = 0;
  for (auto v : w.letters()) {
    if (v > 0) {
      ++pluses_seen;
    } else {
      inv += pluses_seen;
    }
  }
  return inv;
}

}  // namespace homomesy
