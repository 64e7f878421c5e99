#pragma once

#include <vector>

#include "homomesy/rational.hpp"

namespace homomesy {

/// Result of exact Gauss-Jordan elimination.
struct EchelonForm {
  RationalMatrix reduced;            ///< reduced row echelon form, same shape as the input
  std::vector<Eigen::Index> pivots;  ///< pivot column of each nonzero row, ascending
};

EchelonForm reduced_row_echelon(const RationalMatrix& m);

Eigen::Index rational_rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}.
///
/// One vector per free column f of the reduced echelon form: v_f has a 1 in
/// position f, zeros in the other free positions, and the negated pivot-row
/// entries in the pivot positions. The result depends only on the kernel, so it
/// is canonical. Vectors are ordered by free column.
std::vector<RationalVector> rational_nullspace(const RationalMatrix& m);

/// Solves a x = b for square nonsingular a. Throws std::invalid_argument when a
/// is not square or singular.
RationalVector solve_exact(const RationalMatrix& a, const RationalVector& b);

/// True when v is a linear combination of the given vectors (all of equal size).
bool in_span(const std::vector<RationalVector>& vectors, const RationalVector& v);

/// Stacks the vectors as columns.
RationalMatrix columns_matrix(const std::vector<RationalVector>& vectors, Eigen::Index rows);

}  // namespace homomesy
