#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace homomesy {

/// Fixed-size bitmask over the elements of a poset.
///
/// Bit i is element i in the poset's element order. Sets of equal size are
/// totally ordered by their value as unsigned integers (bit i has weight 2^i),
/// which is the canonical order of ideals and antichains.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size);

  static ElementSet full(std::size_t size);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet complement() const;
  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Members in ascending order.
  std::vector<std::size_t> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int low = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(low));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace homomesy
