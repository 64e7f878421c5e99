#pragma once

#include <string>
#include <vector>

#include "homomesy/engine.hpp"

namespace homomesy::gallery {

/// Partition with weakly decreasing positive parts. parts[0] is the bottom
/// row in French drawing.
struct YoungDiagram {
  std::vector<int> parts;

  int boxes() const;
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;
};

/// True when the parts are a partition whose hull (parts[0] columns by
/// parts.size() rows) fits inside the staircase (n-1, n-2, ..., 1).
bool in_Yn(int n, const YoungDiagram& lambda);

/// Drop the bottom row (k boxes), slide the rest one step down and right, and
/// insert a column of n-1-k boxes at the left. Throws std::invalid_argument
/// unless lambda is in Y_n.
YoungDiagram suter_rho(int n, const YoungDiagram& lambda);

/// Sum over boxes (r, c), 1-based with r the row from the bottom, of the
/// weight n - r - c + 1.
long long suter_weight(int n, const YoungDiagram& lambda);

/// Sum of weight * ([weight == i] + [weight == j]) over boxes. Requires
/// i + j == n; when i == j every box of that weight counts twice, so that
/// suter_weight is half the sum of the refined statistics over i = 1..n-1.
long long suter_weight_ij(int n, int i, int j, const YoungDiagram& lambda);

/// All of Y_n (2^(n-1) diagrams), ascending.
std::vector<YoungDiagram> enumerate_Yn(int n, std::size_t guard = kDefaultEnumerationGuard);

/// Y_n under suter_rho with statistics "weight" and "weight-ij:<i>" for
/// i = 1..n-1.
DynamicalSystem<YoungDiagram> suter_space(int n, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace homomesy::gallery
