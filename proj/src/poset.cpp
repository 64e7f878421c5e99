#include "homomesy/poset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace homomesy {

Poset::Poset(std::size_t n, std::vector<Cover> covers, std::vector<std::string> labels)
    : n_(n),
      covers_(std::move(covers)),
      labels_(std::move(labels)),
      lower_covers_(n),
      upper_covers_(n),
      below_(n, ElementSet(n)),
      above_(n, ElementSet(n)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n_) throw std::invalid_argument("poset: label count does not match element count");

  for (const Cover& c : covers_) {
    if (c.lower >= n_ || c.upper >= n_) throw std::invalid_argument("poset: cover references unknown element");
    if (c.lower == c.upper) throw std::invalid_argument("poset: element cannot cover itself");
    lower_covers_[c.upper].push_back(c.lower);
    upper_covers_[c.lower].push_back(c.upper);
  }
  for (auto& v : lower_covers_) std::sort(v.begin(), v.end());
  for (auto& v : upper_covers_) std::sort(v.begin(), v.end());

  // Kahn's algorithm with a min-heap yields the lexicographically smallest
  // linear extension and detects cycles.
  std::vector<std::size_t> pending(n_);
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n_; ++x) {
    pending[x] = lower_covers_[x].size();
    if (pending[x] == 0) ready.push(x);
  }
  while (!ready.empty()) {
    const Element x = ready.top();
    ready.pop();
    linear_extension_.push_back(x);
    for (Element y : upper_covers_[x]) {
      if (--pending[y] == 0) ready.push(y);
    }
  }
  if (linear_extension_.size() != n_) throw std::invalid_argument("poset: cover relations contain a cycle");

  for (Element x : linear_extension_) {
    for (Element y : lower_covers_[x]) {
      below_[x].set(y);
      below_[x] |= below_[y];
    }
  }
  for (Element x = 0; x < n_; ++x) {
    below_[x].for_each([&](std::size_t y) { above_[y].set(x); });
  }
}

std::optional<Poset::Element> Poset::find(std::string_view label) const {
  for (Element x = 0; x < n_; ++x) {
    if (labels_[x] == label) return x;
  }
  return std::nullopt;
}

namespace {

std::vector<Poset::Cover> grid_covers(int a, int b) {
  std::vector<Poset::Cover> covers;
  for (int k = 1; k <= a; ++k) {
    for (int l = 1; l <= b; ++l) {
      const auto x = static_cast<std::size_t>((k - 1) * b + (l - 1));
      if (k < a) covers.push_back({x, static_cast<std::size_t>(k * b + (l - 1))});
      if (l < b) covers.push_back({x, x + 1});
    }
  }
  return covers;
}

std::vector<std::string> grid_labels(int a, int b) {
  std::vector<std::string> labels;
  for (int k = 1; k <= a; ++k) {
    for (int l = 1; l <= b; ++l) labels.push_back("(" + std::to_string(k) + "," + std::to_string(l) + ")");
  }
  return labels;
}

int checked_positive(int v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string("grid poset: ") + name + " must be at least 1");
  return v;
}

}  // namespace

GridPoset::GridPoset(int a, int b)
    : Poset(static_cast<std::size_t>(checked_positive(a, "a")) * static_cast<std::size_t>(checked_positive(b, "b")),
            grid_covers(a, b), grid_labels(a, b)),
      a_(a),
      b_(b) {}

Poset::Element GridPoset::index(int k, int l) const {
  if (k < 1 || k > a_ || l < 1 || l > b_) {
    throw std::out_of_range("grid element (" + std::to_string(k) + "," + std::to_string(l) + ") outside [" +
                            std::to_string(a_) + "]x[" + std::to_string(b_) + "]");
  }
  return static_cast<Element>((k - 1) * b_ + (l - 1));
}

int GridPoset::rank(Element x) const {
  const GridElement e = coords(x);
  return e.k + e.l - 2;
}

int GridPoset::file(Element x) const {
  const GridElement e = coords(x);
  return e.l - e.k;
}

Poset::Element GridPoset::opposite(Element x) const {
  const GridElement e = coords(x);
  return index(a_ + 1 - e.k, b_ + 1 - e.l);
}

ElementSet GridPoset::file_members(int f) const {
  ElementSet s(size());
  for (Element x = 0; x < size(); ++x) {
    if (file(x) == f) s.set(x);
  }
  return s;
}

ElementSet GridPoset::positive_fiber_members(int k) const {
  ElementSet s(size());
  for (int l = 1; l <= b_; ++l) s.set(index(k, l));
  return s;
}

ElementSet GridPoset::negative_fiber_members(int l) const {
  ElementSet s(size());
  for (int k = 1; k <= a_; ++k) s.set(index(k, l));
  return s;
}

GridPoset build_grid_poset(int a, int b) { return GridPoset(a, b); }

bool is_order_ideal(const Poset& p, const ElementSet& s) {
  if (s.size() != p.size()) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (!p.strictly_below(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

bool is_antichain(const Poset& p, const ElementSet& s) {
  if (s.size() != p.size()) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (p.strictly_below(x).intersects(s)) ok = false;
  });
  return ok;
}

OrderIdeal down_closure(const Poset& p, const ElementSet& s) {
  if (s.size() != p.size()) throw std::invalid_argument("down_closure: set does not match poset size");
  ElementSet out = s;
  s.for_each([&](std::size_t x) { out |= p.strictly_below(x); });
  return OrderIdeal(std::move(out));
}

Antichain maximal_elements(const Poset& p, const OrderIdeal& ideal) {
  ElementSet out(p.size());
  const ElementSet& members = ideal.members();
  members.for_each([&](std::size_t x) {
    if (!p.strictly_above(x).intersects(members)) out.set(x);
  });
  return Antichain(std::move(out));
}

Antichain minimal_elements_of_complement(const Poset& p, const OrderIdeal& ideal) {
  const ElementSet rest = ideal.members().complement();
  ElementSet out(p.size());
  rest.for_each([&](std::size_t x) {
    if (!p.strictly_below(x).intersects(rest)) out.set(x);
  });
  return Antichain(std::move(out));
}

std::size_t binomial_saturating(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::size_t>(r);
}

std::vector<OrderIdeal> enumerate_order_ideals(const Poset& p, std::size_t guard) {
  const auto& order = p.linear_extension();
  const std::size_t n = p.size();
  std::vector<OrderIdeal> out;

  // Decide each element in linear-extension order; an element may join only
  // if its lower covers already have, so every leaf is a distinct ideal.
  std::vector<std::pair<std::size_t, ElementSet>> stack;
  stack.emplace_back(0, ElementSet(n));
  while (!stack.empty()) {
    auto [depth, current] = std::move(stack.back());
    stack.pop_back();
    if (depth == n) {
      if (out.size() == guard) {
        throw GuardExceeded("order ideal enumeration exceeded guard of " + std::to_string(guard));
      }
      out.emplace_back(std::move(current));
      continue;
    }
    const auto x = order[depth];
    const auto& lower = p.lower_covers(x);
    const bool addable = std::all_of(lower.begin(), lower.end(), [&](auto y) { return current.test(y); });
    if (addable) {
      ElementSet with = current;
      with.set(x);
      stack.emplace_back(depth + 1, std::move(with));
    }
    stack.emplace_back(depth + 1, std::move(current));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderIdeal> enumerate_order_ideals(const GridPoset& p, std::size_t guard) {
  const auto count = binomial_saturating(static_cast<std::size_t>(p.a() + p.b()), static_cast<std::size_t>(p.a()));
  if (count > guard) {
    throw GuardExceeded("J([" + std::to_string(p.a()) + "]x[" + std::to_string(p.b()) + "]) has " +
                        std::to_string(count) + " ideals, guard is " + std::to_string(guard));
  }
  return enumerate_order_ideals(static_cast<const Poset&>(p), guard);
}

namespace {

std::vector<Antichain> antichains_from(const Poset& p, const std::vector<OrderIdeal>& ideals) {
  std::vector<Antichain> out;
  out.reserve(ideals.size());
  for (const auto& ideal : ideals) out.push_back(maximal_elements(p, ideal));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Antichain> enumerate_antichains(const Poset& p, std::size_t guard) {
  return antichains_from(p, enumerate_order_ideals(p, guard));
}

std::vector<Antichain> enumerate_antichains(const GridPoset& p, std::size_t guard) {
  return antichains_from(p, enumerate_order_ideals(p, guard));
}

}  // namespace homomesy
