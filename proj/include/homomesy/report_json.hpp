#pragma once

// JSON form of homomesy reports. Rationals are "p/q" strings (integers as
// "p"); a scalar average is a single string, a vector average an array.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homomesy/engine.hpp"

namespace homomesy {

using Json = nlohmann::ordered_json;

inline Json rational_vector_to_json(const RationalVector& v) {
  if (v.size() == 1) return v(0).to_string();
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).to_string());
  return out;
}

/// Inverse of rational_vector_to_json. Throws std::invalid_argument on
/// anything but a string or an array of strings.
inline RationalVector rational_vector_from_json(const Json& j) {
  if (j.is_string()) {
    RationalVector v(1);
    v(0) = Rational::parse(j.get<std::string>());
    return v;
  }
  if (!j.is_array()) throw std::invalid_argument("expected a rational string or an array of them");
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw std::invalid_argument("expected rational strings");
    v(static_cast<Eigen::Index>(i)) = Rational::parse(j[i].get<std::string>());
  }
  return v;
}

template <class State>
Json report_to_json(const HomomesyReport<State>& report, const std::string& map, const std::string& space,
                    const std::function<Json(const State&)>& state_to_json) {
  Json j;
  j["map"] = map;
  j["space"] = space;
  j["statistic"] = report.statistic;
  Json orbits = Json::array();
  for (const auto& o : report.orbits) {
    orbits.push_back({{"rep", state_to_json(o.representative)},
                      {"period", o.period},
                      {"average", rational_vector_to_json(o.average)}});
  }
  j["orbits"] = std::move(orbits);
  j["global_average"] = report.global_average ? rational_vector_to_json(*report.global_average) : Json(nullptr);
  j["homomesic"] = report.homomesic;
  j["c"] = report.c ? rational_vector_to_json(*report.c) : Json(nullptr);
  return j;
}

struct Verdict {
  bool homomesic = false;
  std::optional<RationalVector> c;
};

/// Recomputes the verdict from the orbit averages alone.
inline Verdict verdict_from_json(const Json& report) {
  const Json& orbits = report.at("orbits");
  if (!orbits.is_array() || orbits.empty()) throw std::invalid_argument("report has no orbits");
  const RationalVector first = rational_vector_from_json(orbits.front().at("average"));
  Verdict v;
  v.homomesic = true;
  for (const auto& o : orbits) {
    const RationalVector avg = rational_vector_from_json(o.at("average"));
    if (avg.size() != first.size() || avg != first) v.homomesic = false;
  }
  if (v.homomesic) v.c = first;
  return v;
}

}  // namespace homomesy
