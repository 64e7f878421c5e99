#include "homomesy/gallery/word_systems.hpp"

namespace homomesy::gallery {

namespace {

Statistic<SignWord> inversion_statistic() {
  return scalar_statistic<SignWord>("inversions",
                                    [](const SignWord& w) { return static_cast<std::int64_t>(inversions(w)); });
}

DynamicalSystem<SignWord> shift_space(int a, int b, std::size_t guard) {
  if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("word space needs a, b >= 0 and a + b >= 1");
  DynamicalSystem<SignWord> system;
  system.space = "W(" + std::to_string(a) + "," + std::to_string(b) + ")";
  system.map_name = "left-shift";
  system.states = enumerate_words(a, b, guard);
  system.map = [](const SignWord& w) { return cyclic_shift(w, ShiftDirection::Left); };
  return system;
}

}  // namespace

bool ballot_indicator(const SignWord& w) {
  int partial = 0;
  for (auto v : w.letters()) {
    partial += v;
    if (partial <= 0) return false;
  }
  return true;
}

DynamicalSystem<SignWord> ballot_space(int a, int b, std::size_t guard) {
  auto system = shift_space(a, b, guard);
  system.statistics.push_back(
      scalar_statistic<SignWord>("ballot", [](const SignWord& w) { return std::int64_t{ballot_indicator(w)}; }));
  system.statistics.push_back(inversion_statistic());
  return system;
}

DynamicalSystem<SignWord> cyclic_inversions_space(int a, int b, std::size_t guard) {
  auto system = shift_space(a, b, guard);
  system.statistics.push_back(inversion_statistic());
  return system;
}

}  // namespace homomesy::gallery
