#pragma once

// Orbit machinery and exact homomesy decisions for any invertible map on a
// finite, totally ordered state type.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homomesy/errors.hpp"
#include "homomesy/linalg.hpp"
#include "homomesy/rational.hpp"

namespace homomesy {

/// Cycle of an invertible map, starting at its smallest state.
template <class State>
struct Orbit {
  std::vector<State> states;

  std::size_t period() const { return states.size(); }
  const State& representative() const { return states.front(); }
};

/// Named map from states to fixed-dimension rational vectors. Scalar
/// statistics have dimension 1.
template <class State>
struct Statistic {
  std::string name;
  Eigen::Index dimension = 1;
  std::function<RationalVector(const State&)> eval;

  RationalVector operator()(const State& s) const {
    RationalVector v = eval(s);
    if (v.size() != dimension) {
      throw std::logic_error("statistic '" + name + "' returned dimension " + std::to_string(v.size()) +
                             ", declared " + std::to_string(dimension));
    }
    return v;
  }
};

template <class State, class F>
Statistic<State> scalar_statistic(std::string name, F f) {
  return {std::move(name), 1, [f = std::move(f)](const State& s) {
            RationalVector v(1);
            v(0) = Rational(f(s));
            return v;
          }};
}

template <class State, class F>
Statistic<State> vector_statistic(std::string name, Eigen::Index dimension, F f) {
  return {std::move(name), dimension, std::move(f)};
}

/// sum_i coefficients(i) * basis[i], for scalar basis statistics.
template <class State>
Statistic<State> linear_combination(const std::vector<Statistic<State>>& basis, const RationalVector& coefficients,
                                    std::string name = "combination") {
  if (static_cast<Eigen::Index>(basis.size()) != coefficients.size()) {
    throw std::invalid_argument("linear_combination: coefficient count does not match basis");
  }
  return scalar_statistic<State>(std::move(name), [basis, coefficients](const State& s) {
    Rational total(0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rational& c = coefficients(static_cast<Eigen::Index>(i));
      if (!c.is_zero()) total += c * basis[i](s)(0);
    }
    return total;
  });
}

/// Orbit of tau through `seed`, rotated to start at its smallest state.
///
/// Throws GuardExceeded if the orbit has not returned to `seed` after `guard`
/// states, which also covers maps that are not injective along the way.
template <class State, class Map>
Orbit<State> iterate_orbit(const Map& tau, const State& seed, std::size_t guard = kDefaultOrbitGuard) {
  Orbit<State> orbit;
  orbit.states.push_back(seed);
  State current = tau(seed);
  while (!(current == seed)) {
    if (orbit.states.size() >= guard) {
      throw GuardExceeded("orbit did not close within " + std::to_string(guard) + " steps");
    }
    orbit.states.push_back(current);
    current = tau(current);
  }
  const auto smallest = std::min_element(orbit.states.begin(), orbit.states.end());
  std::rotate(orbit.states.begin(), smallest, orbit.states.end());
  return orbit;
}

/// Splits `space` into the orbits of tau, ordered by representative.
///
/// Throws ClosureViolation when tau leaves the space or is not a bijection on
/// it, and GuardExceeded when a single orbit needs more than `guard` steps.
template <class State, class Map>
std::vector<Orbit<State>> orbit_partition(const Map& tau, const std::vector<State>& space,
                                          std::size_t guard = kDefaultOrbitGuard) {
  std::map<State, bool> assigned;
  for (const auto& s : space) assigned.emplace(s, false);

  std::vector<Orbit<State>> orbits;
  for (auto& [start, done] : assigned) {
    if (done) continue;
    // Every smaller state has already been placed, so `start` is the
    // representative and orbits come out in representative order.
    Orbit<State> orbit;
    orbit.states.push_back(start);
    done = true;
    State current = tau(start);
    while (!(current == start)) {
      auto it = assigned.find(current);
      if (it == assigned.end()) throw ClosureViolation("map sends a state outside the state space");
      if (it->second) throw ClosureViolation("map is not injective on the state space");
      if (orbit.states.size() >= guard) {
        throw GuardExceeded("orbit did not close within " + std::to_string(guard) + " steps");
      }
      it->second = true;
      orbit.states.push_back(current);
      current = tau(current);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

/// Exact componentwise mean of f over the orbit.
template <class State>
RationalVector orbit_average(const Statistic<State>& f, const Orbit<State>& orbit) {
  RationalVector total = zero_vector(f.dimension);
  for (const auto& s : orbit.states) total += f(s);
  const Rational period(static_cast<std::int64_t>(orbit.period()));
  for (Eigen::Index i = 0; i < total.size(); ++i) total(i) /= period;
  return total;
}

template <class State>
struct OrbitSummary {
  State representative;
  std::size_t period = 0;
  RationalVector average;
};

/// Outcome of a homomesy check. `c` is present exactly when `homomesic`.
template <class State>
struct HomomesyReport {
  std::string statistic;
  std::vector<OrbitSummary<State>> orbits;
  /// Mean over all states; present when the orbits cover the full space.
  std::optional<RationalVector> global_average;
  bool homomesic = false;
  std::optional<RationalVector> c;
};

/// Builds a report from precomputed orbits. `full_space` says whether the
/// orbits cover the whole state space, which makes the global average
/// meaningful.
template <class State>
HomomesyReport<State> summarize_orbits(const std::vector<Orbit<State>>& orbits, const Statistic<State>& f,
                                       bool full_space = true) {
  if (orbits.empty()) throw std::invalid_argument("homomesy check on an empty state space");
  HomomesyReport<State> report;
  report.statistic = f.name;

  RationalVector grand_total = zero_vector(f.dimension);
  std::size_t state_count = 0;
  for (const auto& orbit : orbits) {
    RationalVector total = zero_vector(f.dimension);
    for (const auto& s : orbit.states) total += f(s);
    grand_total += total;
    state_count += orbit.period();

    RationalVector average = total;
    const Rational period(static_cast<std::int64_t>(orbit.period()));
    for (Eigen::Index i = 0; i < average.size(); ++i) average(i) /= period;
    report.orbits.push_back({orbit.representative(), orbit.period(), std::move(average)});
  }

  if (full_space) {
    const Rational n(static_cast<std::int64_t>(state_count));
    for (Eigen::Index i = 0; i < grand_total.size(); ++i) grand_total(i) /= n;
    report.global_average = grand_total;
  }

  const RationalVector& first = report.orbits.front().average;
  report.homomesic = std::all_of(report.orbits.begin(), report.orbits.end(),
                                 [&](const auto& o) { return o.average == first; });
  if (report.homomesic) report.c = first;
  return report;
}

template <class State, class Map>
HomomesyReport<State> check_homomesy(const Map& tau, const std::vector<State>& space, const Statistic<State>& f,
                                     std::size_t guard = kDefaultOrbitGuard) {
  return summarize_orbits(orbit_partition(tau, space, guard), f, true);
}

/// f = invariant_part + zero_mesic_part, where invariant_part(s) is the average
/// of f over the orbit of s.
template <class State>
struct Decomposition {
  Statistic<State> invariant_part;
  Statistic<State> zero_mesic_part;
};

template <class State>
Decomposition<State> invariant_homomesic_decomposition(const std::vector<Orbit<State>>& orbits,
                                                       const Statistic<State>& f) {
  auto averages = std::make_shared<std::map<State, RationalVector>>();
  for (const auto& orbit : orbits) {
    const RationalVector avg = orbit_average(f, orbit);
    for (const auto& s : orbit.states) averages->emplace(s, avg);
  }
  auto lookup = [averages](const State& s) -> const RationalVector& {
    auto it = averages->find(s);
    if (it == averages->end()) throw std::out_of_range("state outside the decomposed state space");
    return it->second;
  };
  Statistic<State> invariant{f.name + ":invariant", f.dimension, [lookup](const State& s) { return lookup(s); }};
  Statistic<State> zero_mesic{f.name + ":0-mesic", f.dimension,
                              [f, lookup](const State& s) { return RationalVector(f(s) - lookup(s)); }};
  return {std::move(invariant), std::move(zero_mesic)};
}

template <class State, class Map>
Decomposition<State> invariant_homomesic_decomposition(const Map& tau, const std::vector<State>& space,
                                                       const Statistic<State>& f,
                                                       std::size_t guard = kDefaultOrbitGuard) {
  return invariant_homomesic_decomposition(orbit_partition(tau, space, guard), f);
}

/// Row o holds the orbit averages of the scalar basis statistics on orbit o.
template <class State>
RationalMatrix orbit_average_matrix(const std::vector<Orbit<State>>& orbits,
                                    const std::vector<Statistic<State>>& basis) {
  if (basis.empty()) throw std::invalid_argument("homomesic_subspace: empty basis");
  for (const auto& f : basis) {
    if (f.dimension != 1) throw std::invalid_argument("homomesic_subspace: basis statistic '" + f.name + "' is not scalar");
  }
  RationalMatrix m(static_cast<Eigen::Index>(orbits.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      m(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(j)) = orbit_average(basis[j], orbits[o])(0);
    }
  }
  return m;
}

/// Basis of {c : sum_i c_i basis[i] is homomesic}.
///
/// Computed as the nullspace of the matrix whose rows are the differences
/// between each orbit's average vector and that of the first orbit (smallest
/// representative). See rational_nullspace for the canonical form.
template <class State>
std::vector<RationalVector> homomesic_subspace(const std::vector<Orbit<State>>& orbits,
                                               const std::vector<Statistic<State>>& basis) {
  const RationalMatrix averages = orbit_average_matrix(orbits, basis);
  const Eigen::Index rows = averages.rows() > 0 ? averages.rows() - 1 : 0;
  RationalMatrix differences(rows, averages.cols());
  for (Eigen::Index o = 0; o < rows; ++o) differences.row(o) = averages.row(o + 1) - averages.row(0);
  return rational_nullspace(differences);
}

template <class State, class Map>
std::vector<RationalVector> homomesic_subspace(const Map& tau, const std::vector<State>& space,
                                               const std::vector<Statistic<State>>& basis,
                                               std::size_t guard = kDefaultOrbitGuard) {
  return homomesic_subspace(orbit_partition(tau, space, guard), basis);
}

/// A finite state space with an invertible map and the statistics of interest.
template <class State>
struct DynamicalSystem {
  std::string space;
  std::string map_name;
  std::vector<State> states;
  std::function<State(const State&)> map;
  std::vector<Statistic<State>> statistics;

  const Statistic<State>& statistic(const std::string& name) const {
    for (const auto& s : statistics) {
      if (s.name == name) return s;
    }
    throw std::invalid_argument("unknown statistic '" + name + "' for " + space);
  }
};

}  // namespace homomesy
