#include "homomesy/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace homomesy {

EchelonForm reduced_row_echelon(const RationalMatrix& m) {
  EchelonForm out{m, {}};
  RationalMatrix& r = out.reduced;
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = lead; i < rows; ++i) {
      if (!r(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) r.row(pivot).swap(r.row(lead));

    const Rational inv = Rational(1) / r(lead, col);
    for (Eigen::Index j = col; j < cols; ++j) r(lead, j) *= inv;

    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == lead || r(i, col).is_zero()) continue;
      const Rational factor = r(i, col);
      for (Eigen::Index j = col; j < cols; ++j) r(i, j) -= factor * r(lead, j);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  return out;
}

Eigen::Index rational_rank(const RationalMatrix& m) {
  return static_cast<Eigen::Index>(reduced_row_echelon(m).pivots.size());
}

std::vector<RationalVector> rational_nullspace(const RationalMatrix& m) {
  const EchelonForm e = reduced_row_echelon(m);
  const Eigen::Index cols = m.cols();

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<RationalVector> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RationalVector v = zero_vector(cols);
    v(f) = Rational(1);
    for (std::size_t row = 0; row < e.pivots.size(); ++row) {
      v(e.pivots[row]) = -e.reduced(static_cast<Eigen::Index>(row), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve_exact(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw std::invalid_argument("solve_exact: dimension mismatch");
  }
  const Eigen::Index n = a.rows();
  RationalMatrix augmented(n, n + 1);
  augmented.leftCols(n) = a;
  augmented.col(n) = b;
  const EchelonForm e = reduced_row_echelon(augmented);
  if (static_cast<Eigen::Index>(e.pivots.size()) != n || (n > 0 && e.pivots.back() != n - 1)) {
    throw std::invalid_argument("solve_exact: singular system");
  }
  return e.reduced.col(n);
}

RationalMatrix columns_matrix(const std::vector<RationalVector>& vectors, Eigen::Index rows) {
  RationalMatrix m(rows, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != rows) throw std::invalid_argument("columns_matrix: size mismatch");
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return m;
}

bool in_span(const std::vector<RationalVector>& vectors, const RationalVector& v) {
  if (vectors.empty()) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (!v(i).is_zero()) return false;
    }
    return true;
  }
  const RationalMatrix base = columns_matrix(vectors, v.size());
  RationalMatrix extended(v.size(), base.cols() + 1);
  extended.leftCols(base.cols()) = base;
  extended.col(base.cols()) = v;
  return rational_rank(extended) == rational_rank(base);
}

}  // namespace homomesy
