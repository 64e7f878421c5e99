#include "homomesy/grid_systems.hpp"

namespace homomesy {

namespace {

std::string pair_label(const GridPoset& p, Poset::Element x) {
  const GridElement e = p.coords(x);
  return "(" + std::to_string(e.k) + "," + std::to_string(e.l) + ")";
}

RationalVector set_vector(const GridPoset& p, const ElementSet& s) {
  RationalVector v = zero_vector(static_cast<Eigen::Index>(p.size()));
  s.for_each([&](std::size_t x) { v(static_cast<Eigen::Index>(x)) = 1; });
  return v;
}

template <class Tag>
void add_counting_statistic(DynamicalSystem<ElementSubset<Tag>>& system, std::string name, ElementSet members) {
  system.statistics.push_back(scalar_statistic<ElementSubset<Tag>>(
      std::move(name), [members = std::move(members)](const ElementSubset<Tag>& s) {
        return static_cast<std::int64_t>((s.members() & members).count());
      }));
}

}  // namespace

std::string grid_label(const GridPoset& p) { return "[" + std::to_string(p.a()) + "]x[" + std::to_string(p.b()) + "]"; }

DynamicalSystem<OrderIdeal> grid_ideal_system(const GridPoset& p, GridMap map, std::size_t guard) {
  DynamicalSystem<OrderIdeal> system;
  system.space = "J(" + grid_label(p) + ")";
  system.states = enumerate_order_ideals(p, guard);
  if (map == GridMap::Rowmotion) {
    system.map_name = "rowmotion";
    system.map = [p](const OrderIdeal& i) { return rowmotion_ideal(p, i); };
  } else {
    system.map_name = "promotion";
    system.map = [p](const OrderIdeal& i) { return promotion_ideal(p, i); };
  }
  system.statistics.push_back(scalar_statistic<OrderIdeal>(
      "ideal-size", [](const OrderIdeal& i) { return static_cast<std::int64_t>(i.cardinality()); }));
  for (int f = 1 - p.a(); f <= p.b() - 1; ++f) add_counting_statistic(system, "file:" + std::to_string(f), p.file_members(f));
  for (auto& s : indicator_basis<OrderIdealTag>(p)) system.statistics.push_back(std::move(s));
  return system;
}

DynamicalSystem<Antichain> grid_antichain_system(const GridPoset& p, GridMap map, std::size_t guard) {
  DynamicalSystem<Antichain> system;
  system.space = "A(" + grid_label(p) + ")";
  system.states = enumerate_antichains(p, guard);
  if (map == GridMap::Rowmotion) {
    system.map_name = "rowmotion";
    system.map = [p](const Antichain& a) { return rowmotion_antichain(p, a); };
  } else {
    system.map_name = "promotion";
    system.map = [p](const Antichain& a) { return promotion_antichain(p, a); };
  }
  system.statistics.push_back(scalar_statistic<Antichain>(
      "antichain-size", [](const Antichain& a) { return static_cast<std::int64_t>(a.cardinality()); }));
  for (int k = 1; k <= p.a(); ++k) {
    add_counting_statistic(system, "positive-fiber:" + std::to_string(k), p.positive_fiber_members(k));
  }
  for (int l = 1; l <= p.b(); ++l) {
    add_counting_statistic(system, "negative-fiber:" + std::to_string(l), p.negative_fiber_members(l));
  }
  for (auto& s : indicator_basis<AntichainTag>(p)) system.statistics.push_back(std::move(s));
  return system;
}

std::vector<NamedGenerator> ideal_generators(const GridPoset& p) {
  std::vector<NamedGenerator> out;
  for (int f = 1 - p.a(); f <= p.b() - 1; ++f) {
    out.push_back({"file-sum " + std::to_string(f), set_vector(p, p.file_members(f))});
  }
  for (Poset::Element x = 0; x < p.size(); ++x) {
    const Poset::Element y = p.opposite(x);
    if (y < x) continue;
    RationalVector v = zero_vector(static_cast<Eigen::Index>(p.size()));
    v(static_cast<Eigen::Index>(x)) += 1;
    v(static_cast<Eigen::Index>(y)) += 1;
    out.push_back({"opposite-sum " + pair_label(p, x) + "+" + pair_label(p, y), std::move(v)});
  }
  return out;
}

std::vector<NamedGenerator> antichain_generators(const GridPoset& p) {
  std::vector<NamedGenerator> out;
  for (int k = 1; k <= p.a(); ++k) {
    out.push_back({"positive-fiber-sum " + std::to_string(k), set_vector(p, p.positive_fiber_members(k))});
  }
  for (int l = 1; l <= p.b(); ++l) {
    out.push_back({"negative-fiber-sum " + std::to_string(l), set_vector(p, p.negative_fiber_members(l))});
  }
  for (Poset::Element x = 0; x < p.size(); ++x) {
    const Poset::Element y = p.opposite(x);
    if (y <= x) continue;
    RationalVector v = zero_vector(static_cast<Eigen::Index>(p.size()));
    v(static_cast<Eigen::Index>(x)) = 1;
    v(static_cast<Eigen::Index>(y)) = -1;
    out.push_back({"opposite-difference " + pair_label(p, x) + "-" + pair_label(p, y), std::move(v)});
  }
  return out;
}

}  // namespace homomesy
