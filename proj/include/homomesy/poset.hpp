#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homomesy/element_set.hpp"
#include "homomesy/errors.hpp"

namespace homomesy {

/// A subset of poset elements carrying what kind of subset it is.
template <class Tag>
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(ElementSet members) : members_(std::move(members)) {}

  const ElementSet& members() const { return members_; }
  std::size_t cardinality() const { return members_.count(); }
  bool contains(std::size_t x) const { return members_.test(x); }

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
  friend std::strong_ordering operator<=>(const ElementSubset& a, const ElementSubset& b) {
    return a.members_ <=> b.members_;
  }

 private:
  ElementSet members_;
};

struct OrderIdealTag;
struct AntichainTag;

/// Down-closed subset. Filters are represented by the complement of an ideal.
using OrderIdeal = ElementSubset<OrderIdealTag>;
/// Pairwise incomparable subset.
using Antichain = ElementSubset<AntichainTag>;

/// Finite poset on elements 0..n-1 given by its cover relations.
class Poset {
 public:
  using Element = std::size_t;

  /// `lower` is covered by `upper`.
  struct Cover {
    Element lower;
    Element upper;
    friend bool operator==(const Cover&, const Cover&) = default;
  };

  /// Throws std::invalid_argument for out-of-range elements, self covers or
  /// cycles.
  Poset(std::size_t n, std::vector<Cover> covers, std::vector<std::string> labels = {});
  virtual ~Poset() = default;
  Poset(const Poset&) = default;
  Poset& operator=(const Poset&) = default;

  std::size_t size() const { return n_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_covers_.at(x); }
  const std::vector<Element>& upper_covers(Element x) const { return upper_covers_.at(x); }
  const ElementSet& strictly_below(Element x) const { return below_.at(x); }
  const ElementSet& strictly_above(Element x) const { return above_.at(x); }

  bool less(Element x, Element y) const { return below_.at(y).test(x); }
  bool comparable(Element x, Element y) const { return x == y || less(x, y) || less(y, x); }

  /// Lexicographically smallest linear extension (bottom first).
  const std::vector<Element>& linear_extension() const { return linear_extension_; }

  const std::string& label(Element x) const { return labels_.at(x); }
  std::optional<Element> find(std::string_view label) const;

  ElementSet empty_set() const { return ElementSet(n_); }

 private:
  std::size_t n_;
  std::vector<Cover> covers_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Element>> lower_covers_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
  std::vector<Element> linear_extension_;
};

/// Element (k, l) of [a] x [b], 1-based.
struct GridElement {
  int k;
  int l;
  friend auto operator<=>(const GridElement&, const GridElement&) = default;
};

/// The product of chains [a] x [b].
///
/// Element (k, l) has index (k-1)*b + (l-1), i.e. lexicographic order. Every
/// bitmask, canonical representative and serialized form depends on this.
class GridPoset : public Poset {
 public:
  GridPoset(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }

  Element index(int k, int l) const;
  Element index(GridElement e) const { return index(e.k, e.l); }
  GridElement coords(Element x) const {
    return {static_cast<int>(x) / b_ + 1, static_cast<int>(x) % b_ + 1};
  }

  /// k + l - 2, in [0, a+b-2].
  int rank(Element x) const;
  /// l - k, in [1-a, b-1].
  int file(Element x) const;
  int positive_fiber(Element x) const { return coords(x).k; }
  int negative_fiber(Element x) const { return coords(x).l; }
  /// Image under 180 degree rotation: (a+1-k, b+1-l).
  Element opposite(Element x) const;

  ElementSet file_members(int f) const;
  ElementSet positive_fiber_members(int k) const;
  ElementSet negative_fiber_members(int l) const;

 private:
  int a_;
  int b_;
};

/// Throws std::invalid_argument unless a >= 1 and b >= 1.
GridPoset build_grid_poset(int a, int b);

bool is_order_ideal(const Poset& p, const ElementSet& s);
bool is_antichain(const Poset& p, const ElementSet& s);

/// Smallest down-closed superset of s.
OrderIdeal down_closure(const Poset& p, const ElementSet& s);
inline OrderIdeal down_closure(const Poset& p, const Antichain& a) { return down_closure(p, a.members()); }

Antichain maximal_elements(const Poset& p, const OrderIdeal& ideal);
/// Minimal elements of P \ I; empty exactly when I is all of P.
Antichain minimal_elements_of_complement(const Poset& p, const OrderIdeal& ideal);

/// All order ideals in ascending bitmask order. Throws GuardExceeded when
/// there are more than `guard` of them.
std::vector<OrderIdeal> enumerate_order_ideals(const Poset& p, std::size_t guard = kDefaultEnumerationGuard);
/// Grid overload: checks binomial(a+b, a) against the guard before enumerating.
std::vector<OrderIdeal> enumerate_order_ideals(const GridPoset& p, std::size_t guard = kDefaultEnumerationGuard);

/// All antichains in ascending bitmask order.
std::vector<Antichain> enumerate_antichains(const Poset& p, std::size_t guard = kDefaultEnumerationGuard);
std::vector<Antichain> enumerate_antichains(const GridPoset& p, std::size_t guard = kDefaultEnumerationGuard);

/// binomial(n, k), saturating at SIZE_MAX.
std::size_t binomial_saturating(std::size_t n, std::size_t k);

}  // namespace homomesy
