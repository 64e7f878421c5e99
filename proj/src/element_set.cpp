#include "homomesy/element_set.hpp"

#include <bit>
#include <stdexcept>

namespace homomesy {

ElementSet::ElementSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t size) { return ElementSet(size).complement(); }

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::none() const {
  for (std::uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

ElementSet ElementSet::complement() const {
  ElementSet out = *this;
  for (auto& w : out.words_) w = ~w;
  if (const std::size_t tail = size_ % 64; tail != 0) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  if (o.size_ != size_) throw std::invalid_argument("ElementSet size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  if (o.size_ != size_) throw std::invalid_argument("ElementSet size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace homomesy
