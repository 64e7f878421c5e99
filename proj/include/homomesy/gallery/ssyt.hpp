#pragma once

#include <compare>
#include <span>
#include <vector>

#include "homomesy/engine.hpp"

namespace homomesy::gallery {

/// Cell of a rectangular shape, 1-based matrix coordinates.
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Semistandard tableau of rectangular shape with entries in [1, ceiling].
/// Ordered by (shape, ceiling, row-major entries).
class RectTableau {
 public:
  /// Throws std::invalid_argument unless the row-major entries fill the
  /// shape, lie in [1, ceiling], increase weakly along rows and strictly down
  /// columns.
  RectTableau(int rows, int cols, int ceiling, std::vector<int> entries);
  RectTableau(int ceiling, const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int ceiling() const { return ceiling_; }
  int at(int row, int col) const { return entries_[static_cast<std::size_t>((row - 1) * cols_ + (col - 1))]; }
  const std::vector<int>& entries() const { return entries_; }
  std::vector<std::vector<int>> as_rows() const;

  friend bool operator==(const RectTableau&, const RectTableau&) = default;
  friend auto operator<=>(const RectTableau&, const RectTableau&) = default;

 private:
  int rows_;
  int cols_;
  int ceiling_;
  std::vector<int> entries_;
};

/// Bender-Knuth involution t_i: in every row, the i and i+1 entries not
/// matched vertically (i directly above i+1) form a run of x i's followed by
/// y (i+1)'s, which becomes y i's followed by x (i+1)'s. Throws
/// std::invalid_argument unless 1 <= i <= ceiling-1.
RectTableau bk_involution(const RectTableau& t, int i);

/// Promotion: t_{k-1} o ... o t_2 o t_1, i.e. t_1 is applied first.
RectTableau ssyt_promotion(const RectTableau& t);

/// Sum of the entries in the given cells. Throws std::invalid_argument for a
/// cell outside the shape.
long long sigma_R(const RectTableau& t, std::span<const Cell> cells);

/// Invariant under (r, c) -> (rows+1-r, cols+1-c).
bool is_centrally_symmetric(int rows, int cols, std::span<const Cell> cells);

/// Every centrally symmetric subset of the rows x cols rectangle.
std::vector<std::vector<Cell>> centrally_symmetric_subsets(int rows, int cols);

/// All tableaux of the given shape and ceiling, ascending.
std::vector<RectTableau> enumerate_ssyt(int rows, int cols, int ceiling, std::size_t guard = kDefaultEnumerationGuard);

Statistic<RectTableau> sigma_statistic(std::vector<Cell> cells);

/// SSYT_k(cols^rows) under promotion with the "corners" statistic (sigma_R on
/// the top-left and bottom-right cells).
DynamicalSystem<RectTableau> ssyt_space(int rows, int cols, int ceiling, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace homomesy::gallery
