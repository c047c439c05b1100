#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "permsub/exactgeom.hpp"
#include "permsub/flagsub.hpp"

namespace permsub {

/// Per hexagon: the diagonals attaining the maximum and the induced split
/// (the remaining diagonal when exactly two attain it, -1 when undivided).
struct PatternSignature {
  std::vector<std::vector<int>> attaining;
  std::vector<int> split;

  std::string to_string() const;
  friend bool operator==(const PatternSignature&, const PatternSignature&) = default;
};

/// Throws InputError unless w satisfies HXE, HXM and SQR.
PatternSignature pattern_signature(const HeightFunction& w);

/// The fan Φ_n inside {w : Σ w = 0} ⊂ Q^{n!}, coordinates ordered as
/// all_permutations(n). Cones are stored as sorted ray-index lists.
struct Fan {
  int n = 0;
  std::size_t ambient = 0;
  std::size_t lineality_dim = 0;
  QMatrix lineality;  // reduced row echelon basis
  QMatrix rays;       // primitive, orthogonal to the lineality space, sorted
  /// cones[k] lists the cones of dimension k + 1 modulo lineality.
  std::vector<std::vector<std::vector<std::size_t>>> cones;
  std::vector<std::vector<std::size_t>> maximal;  // ray-index lists
  std::vector<Cone> maximal_cones;                // H- and V-descriptions
  std::size_t sign_choices = 0;                   // 3^H systems solved

  /// Sum of the rays of maximal cone i (a relative-interior point).
  QVector barycenter(std::size_t i) const;
};

/// Linear constraints defining Φ_n: HXE, SQR and Σ w = 0 equalities.
QMatrix skeleton_equalities(int n);

Fan enumerate_fan(int n, unsigned threads = 0);

struct FanCensus {
  std::vector<std::size_t> f_vector;
  std::vector<std::size_t> maximal_by_ray_count;  // index = number of rays
  std::size_t simplicial = 0;
};

FanCensus f_vector_census(const Fan& fan);

/// One exact interior sample of a maximal cone.
struct ConeSample {
  QVector heights;
  std::vector<std::vector<std::size_t>> cells;  // lower_cells labels
};

struct ConeRefinement {
  std::size_t cone = 0;
  std::size_t ray_count = 0;
  std::vector<ConeSample> samples;
  /// Distinct finest subdivisions among the samples.
  std::vector<std::vector<std::vector<std::size_t>>> subdivisions;
  bool patterns_equal = true;
  bool samples_permutahedral = true;  // skeleton conditions and GP cells
};

struct RefinementCensus {
  std::vector<ConeRefinement> cones;
  std::size_t total = 0;
  std::vector<std::string> discrepancies;
};

/// Samples corner-weighted (1/2, 1/4, 1/4) combinations of every ray triple
/// of each maximal cone plus an LP relative-interior witness, subdivides them
/// and counts distinct subdivisions that are not coarsenings of another.
RefinementCensus refinement_census(const Fan& fan, unsigned threads = 0);

/// Finite polygonal complex: polygons are closed vertex walks.
struct PolygonComplex {
  std::size_t vertices = 0;
  std::vector<std::array<std::size_t, 2>> edges;
  std::vector<std::vector<std::size_t>> polygons;
};

struct Homology {
  std::vector<std::size_t> betti;  // b0, b1, b2
  long euler = 0;
};

/// Rational Betti numbers from boundary-matrix ranks. Throws InputError if a
/// polygon side is not an edge of the complex.
Homology rational_homology(const PolygonComplex& complex);

/// Link of the fan: rays, 2-dimensional cones and maximal cones with their
/// boundary walks. Throws InputError unless the fan has dimension 3 modulo
/// lineality and is pure.
PolygonComplex link_complex(const Fan& fan);

Homology link_homology(const Fan& fan);

/// GraphViz edge list of the link graph.
std::string link_graph_dot(const Fan& fan);

/// Orbits of the maximal cones under the automorphism group of Π_n; throws
/// std::logic_error if some generator does not map the fan to itself.
std::vector<std::vector<std::size_t>> maximal_cone_orbits(const Fan& fan);

}  // namespace permsub
