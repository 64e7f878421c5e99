#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homomesy {

enum class ShiftDirection { Left, Right };

/// Word over {-1, +1}.
///
/// Words are ordered lexicographically with -1 < +1, which matches reading
/// -1 as 0 and +1 as 1 in a bit string. The text form uses '-' and '+'.
template <class Tag>
class PlusMinusWord {
 public:
  PlusMinusWord() = default;
  explicit PlusMinusWord(std::vector<std::int8_t> letters) : letters_(std::move(letters)) {
    for (auto v : letters_) {
      if (v != 1 && v != -1) throw std::invalid_argument("word letters must be -1 or +1");
    }
  }
  PlusMinusWord(std::initializer_list<int> letters) {
    for (int v : letters) {
      if (v != 1 && v != -1) throw std::invalid_argument("word letters must be -1 or +1");
      letters_.push_back(static_cast<std::int8_t>(v));
    }
  }

  /// Accepts '+'/'-' (and the Unicode minus U+2212) or '1'/'0'.
  static PlusMinusWord parse(std::string_view text) {
    std::vector<std::int8_t> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '+' || c == '1') {
        out.push_back(1);
      } else if (c == '-' || c == '0') {
        out.push_back(-1);
      } else if (text.substr(i, 3) == "\xE2\x88\x92") {
        out.push_back(-1);
        i += 2;
      } else if (c != ' ' && c != ',' && c != '|') {
        throw std::invalid_argument("malformed sign word '" + std::string(text) + "'");
      }
    }
    return PlusMinusWord(std::move(out));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<std::int8_t>& letters() const { return letters_; }

  std::size_t count_minus() const {
    std::size_t n = 0;
    for (auto v : letters_) n += v < 0;
    return n;
  }
  std::size_t count_plus() const { return size() - count_minus(); }

  std::string to_string() const {
    std::string s;
    for (auto v : letters_) s += v > 0 ? '+' : '-';
    return s;
  }

  /// '1' for +1 and '0' for -1.
  std::string to_bits() const {
    std::string s;
    for (auto v : letters_) s += v > 0 ? '1' : '0';
    return s;
  }

  friend bool operator==(const PlusMinusWord&, const PlusMinusWord&) = default;
  friend auto operator<=>(const PlusMinusWord&, const PlusMinusWord&) = default;

 private:
  std::vector<std::int8_t> letters_;
};

struct SignWordTag;
struct StanleyThomasWordTag;

/// Slopes of the lattice path bounding an order ideal of [a] x [b]; also the
/// generic state type of the ballot and multiset-inversion systems.
using SignWord = PlusMinusWord<SignWordTag>;
/// Fiber-occupancy word of an antichain of [a] x [b].
using StanleyThomasWord = PlusMinusWord<StanleyThomasWordTag>;

/// Rotation by one position. Left sends (s1, ..., sn) to (s2, ..., sn, s1).
/// Throws std::invalid_argument on an empty word.
template <class Tag>
PlusMinusWord<Tag> cyclic_shift(const PlusMinusWord<Tag>& w, ShiftDirection direction) {
  if (w.empty()) throw std::invalid_argument("cyclic_shift of an empty word");
  std::vector<std::int8_t> out(w.letters());
  if (direction == ShiftDirection::Left) {
    std::rotate(out.begin(), out.begin() + 1, out.end());
  } else {
    std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
  }
  return PlusMinusWord<Tag>(std::move(out));
}

/// Splits w into maximal blocks (-1,+1) and gaps (+1...+1,-1...-1) and reverses
/// each factor in place.
SignWord block_gap_reversal(const SignWord& w);

/// All words with `minus` letters -1 and `plus` letters +1, ascending.
/// Throws GuardExceeded when there would be more than `guard`.
std::vector<SignWord> enumerate_words(int minus, int plus, std::size_t guard);

/// #{i < j : s_i > s_j}.
std::size_t inversions(const SignWord& w);

}  // namespace homomesy
