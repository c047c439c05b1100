#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permsub/linalg.hpp"
#include "permsub/rational.hpp"

namespace permsub {

/// Points in Q^dim; a point's label is its index.
struct PointConfiguration {
  std::size_t dim = 0;
  std::vector<QVector> points;
};

struct Hull {
  std::size_t affine_dim = 0;
  bool degenerate = false;  // every point coincides
  std::vector<std::size_t> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Facets as sorted lists of the point labels lying on them.
  std::vector<std::vector<std::size_t>> facets;
};

/// Exact vertices, edges and facets of conv(P), computed in its affine span.
Hull hull(const PointConfiguration& config);

/// Cells (sorted label lists, sorted) of the regular subdivision of conv(P)
/// induced by lifting point i to height heights[i]; lower hull convention.
std::vector<std::vector<std::size_t>> lower_cells(const PointConfiguration& config, const QVector& heights);

/// Generators of {z : rows · z >= 0}: a lineality basis and extreme rays of
/// the pointed part, taken inside the row space.
struct ConeGenerators {
  QMatrix lineality;
  QMatrix rays;
};

/// Double description: extreme rays of {z in Q^cols : a z >= 0}.
ConeGenerators double_description(const QMatrix& a, std::size_t cols);

/// A polyhedral cone {x : E x = 0, I x >= 0} with its V-description.
struct Cone {
  std::size_t ambient = 0;
  QMatrix equalities;
  QMatrix inequalities;

  std::size_t dimension = 0;
  std::size_t lineality_dim = 0;
  QMatrix lineality;  // reduced row echelon basis
  /// Primitive integer rays, orthogonal to the lineality space, sorted.
  QMatrix rays;
  /// Equal for equal cones whatever the row order or scaling of the input.
  std::string key;

  /// Only the lineality space remains after quotienting.
  bool trivial() const { return rays.empty(); }
  bool contains(const QVector& x) const;
};

Cone cone_solve(const QMatrix& equalities, const QMatrix& inequalities, std::size_t ambient);

/// Affine constraint coeffs · x + constant (compared against zero).
struct AffineRow {
  QVector coeffs;
  Rational constant = 0;
};

struct LpResult {
  bool feasible = false;
  QVector witness;
};

/// Exact feasibility of {eq = 0, strict > 0, weak >= 0}; returns a witness.
LpResult lp_feasible(const std::vector<AffineRow>& equalities, const std::vector<AffineRow>& strict,
                     const std::vector<AffineRow>& weak, std::size_t dim);

/// JSON-free debug form: a matrix as nested arrays of "p/q" strings.
std::string matrix_to_json(const QMatrix& m);

}  // namespace permsub
