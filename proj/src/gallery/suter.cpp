#include "homomesy/gallery/suter.hpp"

#include <algorithm>
#include <numeric>

namespace homomesy::gallery {

int YoungDiagram::boxes() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool in_Yn(int n, const YoungDiagram& lambda) {
  if (n < 1) return false;
  const auto& p = lambda.parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || (i > 0 && p[i] > p[i - 1])) return false;
  }
  return p.empty() || p.front() + static_cast<int>(p.size()) <= n;
}

namespace {

void require_Yn(int n, const YoungDiagram& lambda, const char* what) {
  if (!in_Yn(n, lambda)) throw std::invalid_argument(std::string(what) + ": diagram is not in Y_" + std::to_string(n));
}

}  // namespace

YoungDiagram suter_rho(int n, const YoungDiagram& lambda) {
  require_Yn(n, lambda, "suter_rho");
  const int k = lambda.parts.empty() ? 0 : lambda.parts.front();
  const int height = n - 1 - k;
  YoungDiagram out;
  out.parts.reserve(static_cast<std::size_t>(height));
  for (int row = 0; row < height; ++row) {
    const auto src = static_cast<std::size_t>(row) + 1;
    out.parts.push_back(1 + (src < lambda.parts.size() ? lambda.parts[src] : 0));
  }
  return out;
}

long long suter_weight(int n, const YoungDiagram& lambda) {
  require_Yn(n, lambda, "suter_weight");
  long long total = 0;
  for (std::size_t r = 0; r < lambda.parts.size(); ++r) {
    for (int c = 1; c <= lambda.parts[r]; ++c) total += n - static_cast<int>(r + 1) - c + 1;
  }
  return total;
}

long long suter_weight_ij(int n, int i, int j, const YoungDiagram& lambda) {
  require_Yn(n, lambda, "suter_weight_ij");
  if (i < 1 || j < 1 || i + j != n) throw std::invalid_argument("suter_weight_ij needs positive i, j with i + j = n");
  long long total = 0;
  for (std::size_t r = 0; r < lambda.parts.size(); ++r) {
    for (int c = 1; c <= lambda.parts[r]; ++c) {
      const int w = n - static_cast<int>(r + 1) - c + 1;
      total += static_cast<long long>(w) * ((w == i) + (w == j));
    }
  }
  return total;
}

std::vector<YoungDiagram> enumerate_Yn(int n, std::size_t guard) {
  if (n < 1) throw std::invalid_argument("enumerate_Yn: n must be at least 1");
  if (n - 1 >= 63 || (std::size_t{1} << (n - 1)) > guard) {
    throw GuardExceeded("Y_" + std::to_string(n) + " exceeds guard of " + std::to_string(guard));
  }
  std::vector<YoungDiagram> out;
  std::vector<int> parts;
  // Parts are chosen bottom row first; the hull constraint fixes how many
  // rows may follow a bottom row of length k.
  auto extend = [&](auto&& self, int max_part, int rows_left) -> void {
    out.push_back(YoungDiagram{parts});
    if (rows_left == 0) return;
    for (int p = 1; p <= max_part; ++p) {
      parts.push_back(p);
      self(self, p, rows_left - 1);
      parts.pop_back();
    }
  };
  out.push_back(YoungDiagram{});
  for (int k = 1; k <= n - 1; ++k) {
    parts.assign(1, k);
    extend(extend, k, n - k - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DynamicalSystem<YoungDiagram> suter_space(int n, std::size_t guard) {
  DynamicalSystem<YoungDiagram> system;
  system.space = "Y_" + std::to_string(n);
  system.map_name = "suter-rho";
  system.states = enumerate_Yn(n, guard);
  system.map = [n](const YoungDiagram& l) { return suter_rho(n, l); };
  system.statistics.push_back(
      scalar_statistic<YoungDiagram>("weight", [n](const YoungDiagram& l) { return std::int64_t{suter_weight(n, l)}; }));
  for (int i = 1; i <= n - 1; ++i) {
    system.statistics.push_back(scalar_statistic<YoungDiagram>(
        "weight-ij:" + std::to_string(i),
        [n, i](const YoungDiagram& l) { return std::int64_t{suter_weight_ij(n, i, n - i, l)}; }));
  }
  return system;
}

}  // namespace homomesy::gallery
