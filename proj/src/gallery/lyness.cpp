#include "homomesy/gallery/lyness.hpp"

namespace homomesy::gallery {

bool in_lyness_domain(const LynessState& s) {
  const Rational one(1);
  return !s.x.is_zero() && !s.y.is_zero() && !(s.x + one).is_zero() && !(s.y + one).is_zero() &&
         !(s.x + s.y + one).is_zero();
}

LynessState lyness_step(const LynessState& s) {
  if (!in_lyness_domain(s)) {
    throw std::invalid_argument("lyness_step: (" + s.x.to_string() + ", " + s.y.to_string() + ") outside the domain");
  }
  return {s.y, (s.y + Rational(1)) / s.x};
}

Rational lyness_h(const Rational& z) {
  const Rational inv = Rational(1) / z;
  return inv + inv * inv;
}

Orbit<LynessState> lyness_orbit(const LynessState& s) { return iterate_orbit(lyness_step, s, 5); }

std::array<Rational, 5> lyness_sequence(const LynessState& s) {
  std::array<Rational, 5> xs;
  LynessState current = s;
  for (auto& x : xs) {
    x = current.x;
    current = lyness_step(current);
  }
  return xs;
}

Rational lyness_orbit_product(const LynessState& s) {
  Rational product(1);
  for (const auto& state : lyness_orbit(s).states) product *= abs(lyness_h(state.x));
  return product;
}

}  // namespace homomesy::gallery
