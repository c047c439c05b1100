#include "permsub/linalg.hpp"

#include <stdexcept>

namespace permsub {

RowEchelon rref(QMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

QMatrix nullspace(const QMatrix& m, std::size_t cols) {
  auto ech = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

QVector project_out(QVector v, const QMatrix& orthogonal_basis) {
  for (const auto& q : orthogonal_basis) {
    const Rational coeff = dot(v, q) / dot(q, q);
    if (coeff == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * q[i];
  }
  return v;
}

QMatrix orthogonal_basis(const QMatrix& vectors) {
  QMatrix basis;
  for (const auto& v : vectors) {
    QVector w = project_out(v, basis);
    bool zero = true;
    for (const auto& x : w) zero = zero && x == 0;
    if (!zero) basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<std::size_t> independent_rows(const QMatrix& m, std::size_t cols) {
  // incremental elimination against the rows accepted so far
  std::vector<std::size_t> chosen;
  QMatrix reduced;
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < m.size(); ++r) {
    QVector v = m[r];
    for (std::size_t t = 0; t < reduced.size(); ++t) {
      if (v[pivots[t]] == 0) continue;
      const Rational factor = v[pivots[t]];
      for (std::size_t c = 0; c < cols; ++c) v[c] -= factor * reduced[t][c];
    }
    std::size_t pivot = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (v[c] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot == cols) continue;
    const Rational inv = 1 / v[pivot];
    for (auto& x : v) x *= inv;
    for (auto& prev : reduced) {
      if (prev[pivot] == 0) continue;
      const Rational factor = prev[pivot];
      for (std::size_t c = 0; c < cols; ++c) prev[c] -= factor * v[c];
    }
    reduced.push_back(std::move(v));
    pivots.push_back(pivot);
    chosen.push_back(r);
  }
  return chosen;
}

QVector solve_square(QMatrix a, QVector b) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) a[r].push_back(b[r]);
  auto ech = rref(std::move(a), n);
  if (ech.pivots.size() != n) throw std::logic_error("solve_square: singular system");
  QVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = ech.rows[r][n];
  return x;
}

}  // namespace permsub
