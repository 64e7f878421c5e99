#include "homomesy/gallery/ssyt.hpp"

#include <algorithm>
#include <set>

namespace homomesy::gallery {

RectTableau::RectTableau(int rows, int cols, int ceiling, std::vector<int> entries)
    : rows_(rows), cols_(cols), ceiling_(ceiling), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1 || ceiling < 1) throw std::invalid_argument("tableau: shape and ceiling must be positive");
  if (entries_.size() != static_cast<std::size_t>(rows * cols)) throw std::invalid_argument("tableau: entry count does not fill the shape");
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      const int v = at(r, c);
      if (v < 1 || v > ceiling) throw std::invalid_argument("tableau: entry outside [1, ceiling]");
      if (c > 1 && at(r, c - 1) > v) throw std::invalid_argument("tableau: row not weakly increasing");
      if (r > 1 && at(r - 1, c) >= v) throw std::invalid_argument("tableau: column not strictly increasing");
    }
  }
}

namespace {

std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw std::invalid_argument("tableau: rows must have equal length");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace

RectTableau::RectTableau(int ceiling, const std::vector<std::vector<int>>& rows)
    : RectTableau(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size()), ceiling,
                  flatten(rows)) {}

std::vector<std::vector<int>> RectTableau::as_rows() const {
  std::vector<std::vector<int>> out;
  for (int r = 0; r < rows_; ++r) {
    out.emplace_back(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
  }
  return out;
}

RectTableau bk_involution(const RectTableau& t, int i) {
  if (i < 1 || i >= t.ceiling()) throw std::invalid_argument("bk_involution: i must lie in [1, ceiling-1]");
  std::vector<int> e = t.entries();
  const int rows = t.rows();
  const int cols = t.cols();
  for (int r = 1; r <= rows; ++r) {
    std::vector<int> free_cols;
    int free_low = 0;
    for (int c = 1; c <= cols; ++c) {
      const int v = t.at(r, c);
      if (v == i && !(r < rows && t.at(r + 1, c) == i + 1)) {
        free_cols.push_back(c);
        ++free_low;
      } else if (v == i + 1 && !(r > 1 && t.at(r - 1, c) == i)) {
        free_cols.push_back(c);
      }
    }
    // Free entries are contiguous in the row; rewrite them with the counts
    // of i and i+1 exchanged.
    const int free_high = static_cast<int>(free_cols.size()) - free_low;
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
      e[static_cast<std::size_t>((r - 1) * cols + free_cols[idx] - 1)] = static_cast<int>(idx) < free_high ? i : i + 1;
    }
  }
  return RectTableau(rows, cols, t.ceiling(), std::move(e));
}

RectTableau ssyt_promotion(const RectTableau& t) {
  RectTableau out = t;
  for (int i = 1; i < t.ceiling(); ++i) out = bk_involution(out, i);
  return out;
}

long long sigma_R(const RectTableau& t, std::span<const Cell> cells) {
  long long total = 0;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.row > t.rows() || c.col < 1 || c.col > t.cols()) {
      throw std::invalid_argument("sigma_R: cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                  ") outside the shape");
    }
    total += t.at(c.row, c.col);
  }
  return total;
}

bool is_centrally_symmetric(int rows, int cols, std::span<const Cell> cells) {
  const std::set<Cell> s(cells.begin(), cells.end());
  return std::all_of(s.begin(), s.end(), [&](const Cell& c) {
    return s.count(Cell{rows + 1 - c.row, cols + 1 - c.col}) == 1;
  });
}

std::vector<std::vector<Cell>> centrally_symmetric_subsets(int rows, int cols) {
  std::vector<std::vector<Cell>> classes;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      const Cell self{r, c};
      const Cell mate{rows + 1 - r, cols + 1 - c};
      if (mate < self) continue;
      classes.push_back(self == mate ? std::vector<Cell>{self} : std::vector<Cell>{self, mate});
    }
  }
  std::vector<std::vector<Cell>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << classes.size()); ++mask) {
    std::vector<Cell> subset;
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (mask >> j & 1U) subset.insert(subset.end(), classes[j].begin(), classes[j].end());
    }
    std::sort(subset.begin(), subset.end());
    out.push_back(std::move(subset));
  }
  return out;
}

std::vector<RectTableau> enumerate_ssyt(int rows, int cols, int ceiling, std::size_t guard) {
  if (rows < 1 || cols < 1 || ceiling < 1) throw std::invalid_argument("enumerate_ssyt: shape and ceiling must be positive");
  std::vector<RectTableau> out;
  std::vector<int> e(static_cast<std::size_t>(rows * cols), 0);
  auto fill = [&](auto&& self, int pos) -> void {
    if (pos == rows * cols) {
      if (out.size() == guard) throw GuardExceeded("SSYT enumeration exceeded guard of " + std::to_string(guard));
      out.emplace_back(rows, cols, ceiling, e);
      return;
    }
    const int r = pos / cols;
    const int c = pos % cols;
    int low = 1;
    if (c > 0) low = std::max(low, e[static_cast<std::size_t>(pos - 1)]);
    if (r > 0) low = std::max(low, e[static_cast<std::size_t>(pos - cols)] + 1);
    // Leave room for the strictly increasing column below.
    const int high = ceiling - (rows - 1 - r);
    for (int v = low; v <= high; ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  fill(fill, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Statistic<RectTableau> sigma_statistic(std::vector<Cell> cells) {
  std::string name = "sigma:";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) name += ';';
    name += std::to_string(cells[i].row) + "," + std::to_string(cells[i].col);
  }
  return scalar_statistic<RectTableau>(std::move(name), [cells = std::move(cells)](const RectTableau& t) {
    return std::int64_t{sigma_R(t, cells)};
  });
}

DynamicalSystem<RectTableau> ssyt_space(int rows, int cols, int ceiling, std::size_t guard) {
  DynamicalSystem<RectTableau> system;
  system.space = "SSYT_" + std::to_string(ceiling) + "(" + std::to_string(cols) + "^" + std::to_string(rows) + ")";
  system.map_name = "promotion";
  system.states = enumerate_ssyt(rows, cols, ceiling, guard);
  system.map = ssyt_promotion;
  Statistic<RectTableau> corners = sigma_statistic({Cell{1, 1}, Cell{rows, cols}});
  corners.name = "corners";
  system.statistics.push_back(std::move(corners));
  return system;
}

}  // namespace homomesy::gallery
