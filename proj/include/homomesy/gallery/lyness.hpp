#pragma once

#include <array>

#include "homomesy/engine.hpp"
#include "homomesy/rational.hpp"

namespace homomesy::gallery {

/// Point (x, y) of the plane with x, y, x+1, y+1 and x+y+1 all nonzero.
struct LynessState {
  Rational x;
  Rational y;

  friend bool operator==(const LynessState&, const LynessState&) = default;
  friend auto operator<=>(const LynessState&, const LynessState&) = default;
};

bool in_lyness_domain(const LynessState& s);

/// (x, y) -> (y, (y+1)/x). Throws std::invalid_argument outside the domain.
LynessState lyness_step(const LynessState& s);

/// h(z) = 1/z + 1/z^2.
Rational lyness_h(const Rational& z);

/// The orbit of s (period 5 on rational points).
Orbit<LynessState> lyness_orbit(const LynessState& s);

/// x_1, ..., x_5 starting from x_1 = s.x, x_2 = s.y.
std::array<Rational, 5> lyness_sequence(const LynessState& s);

/// Product of |h(x)| over the first coordinates of the orbit of s. The
/// statistic log|h(x)| is 0-mesic exactly when this product is 1.
Rational lyness_orbit_product(const LynessState& s);

}  // namespace homomesy::gallery
