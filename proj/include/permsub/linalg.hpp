#pragma once

#include <cstddef>
#include <vector>

#include "permsub/rational.hpp"

namespace permsub {

/// Row-major rational matrix given as a list of rows.
using QMatrix = std::vector<QVector>;

struct RowEchelon {
  QMatrix rows;                      // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form of `m` with `cols` columns.
RowEchelon rref(QMatrix m, std::size_t cols);

std::size_t rank(const QMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, one basis vector per free column (pivot-free
/// columns set to a unit vector).
QMatrix nullspace(const QMatrix& m, std::size_t cols);

/// Orthogonal (not normalised) basis of the span of `vectors`.
QMatrix orthogonal_basis(const QMatrix& vectors);

/// Removes from v its orthogonal projection onto span(orthogonal_basis).
QVector project_out(QVector v, const QMatrix& orthogonal_basis);

/// Indices of a maximal linearly independent subset of rows, greedy in order.
std::vector<std::size_t> independent_rows(const QMatrix& m, std::size_t cols);

/// Solves the square nonsingular system a x = b.
QVector solve_square(QMatrix a, QVector b);

}  // namespace permsub
