#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permsub/permcore.hpp"
#include "permsub/rational.hpp"
#include "permsub/valmat.hpp"

namespace permsub {

/// (w_1, ..., w_n) with rank(w_i) = i.
struct ValuatedFlagMatroid {
  std::vector<ValuatedMatroid> ranks;

  int n() const { return ranks.empty() ? 0 : ranks.front().n(); }
  /// rank d in 1..n
  const ValuatedMatroid& at(int d) const { return ranks.at(static_cast<std::size_t>(d - 1)); }
};

/// Throws InputError unless ranks are 1..n on a common ground set.
void validate_flag_shape(const ValuatedFlagMatroid& flag);

/// Plücker relations of each constituent, incidence relations (with the
/// support quotient test) for consecutive ranks and the exchange form for
/// every other pair.
CheckResult check_flag(const ValuatedFlagMatroid& flag);

/// w : Sym(n) -> Q, stored in the order of all_permutations(n).
struct HeightFunction {
  int n = 0;
  std::vector<Rational> values;

  static HeightFunction zero(int n);
  const Rational& at(const Permutation& p) const { return values[permutation_index(p)]; }
  void set(const Permutation& p, Rational v) { values[permutation_index(p)] = std::move(v); }
  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

/// Lattice points of Π_n: integer vectors majorised by (n, ..., 1).
bool is_permutahedron_lattice_point(const std::vector<int>& x);

/// min { Σ w_i(Y_i) : x = Σ e_{Y_i}, |Y_i| = i }, or nullopt when every
/// decomposition meets an infinite value. Throws InputError when x is not a
/// lattice point of Π_n.
std::optional<Rational> compress(const ValuatedFlagMatroid& flag, const std::vector<int>& x);

/// Number of decompositions x = Σ e_{Y_i} attaining the compression minimum.
std::size_t count_minimal_decompositions(const ValuatedFlagMatroid& flag, const std::vector<int>& x);

/// Compression at every vertex, read off the super-level-set flag. Throws
/// InputError if some vertex value is infinite.
HeightFunction compress_on_vertices(const ValuatedFlagMatroid& flag);

struct BruhatCertificate {
  bool is_interval = false;
  std::optional<std::pair<Permutation, Permutation>> endpoints;
};

bool is_generalized_permutahedron(const std::vector<Permutation>& vertices);
BruhatCertificate is_bruhat_interval_polytope(const std::vector<Permutation>& vertices);

struct Cell {
  std::vector<Permutation> vertices;  // sorted
  bool generalized_permutahedron = false;
  BruhatCertificate bruhat;
};

/// Regular subdivision of Π_n induced by w (lower hull), cells certified.
std::vector<Cell> subdivide(const HeightFunction& w);

struct HexagonReport {
  std::size_t face = 0;  // index into enumerate_two_faces(n)
  std::array<Rational, 2> alternating;  // w(a)+w(c)+w(e), w(b)+w(d)+w(f)
  std::array<Rational, 3> diagonals;    // w(v_t) + w(v_{t+3})
  std::vector<int> attaining;           // diagonals attaining the maximum
  int minimal_vertex = 0;               // cyclic position of the Bruhat-minimal vertex
  bool hxe = false;
  bool hxm = false;
  bool hxm_plus = false;
};

struct SquareReport {
  std::size_t face = 0;
  std::array<Rational, 2> sums;  // w(a)+w(c), w(b)+w(d)
  bool sqr = false;
};

struct SkeletonReport {
  int n = 0;
  std::vector<TwoFace> faces;
  std::vector<HexagonReport> hexagons;
  std::vector<SquareReport> squares;
  bool hxe = true;
  bool hxm = true;
  bool sqr = true;
  bool hxm_plus = true;

  /// Conditions of the 2-skeleton theorem.
  bool permutahedral() const { return hxe && hxm && sqr; }
  bool positive() const { return hxe && sqr && hxm_plus; }
};

SkeletonReport check_two_skeleton(const HeightFunction& w);

struct PotentialResult {
  std::vector<Rational> values;
  std::optional<std::size_t> failing_face;
  bool ok() const { return !failing_face.has_value(); }
};

/// f with f(a) - f(b) = g(a, b) on every edge and f(root) = f0. Edge values
/// are oriented from edges[i].first to edges[i].second. Faces are checked for
/// zero cycle sums first; the first offending face is reported.
PotentialResult reconstruct_potential(const Graph& graph, const std::vector<Rational>& edge_values,
                                      std::size_t root, const Rational& f0);

struct Decomposition {
  std::optional<ValuatedFlagMatroid> flag;
  std::string failure;  // names the violated square or hexagon
};

/// Splits w into (g_1, ..., g_n) with Σ_d g_d(F_d(σ)) = w(σ), anchored at
/// u = 12...n by g_d(F_d(u)) = 0 for d < n and g_n([n]) = w(u).
Decomposition decompose_height(const HeightFunction& w);

struct GrassmannianLift {
  ValuatedMatroid mu;  // rank n on [2n]
  Rational alpha;
  Rational convexity_defect;  // V
};

/// μ(B) = w_{|B∩[n]|}(B∩[n]) + α |B∩[n]|², w_0(∅) = 0, α = max(0, ⌈V/2⌉).
GrassmannianLift lift_to_grassmannian(const ValuatedFlagMatroid& flag);

struct PositivityReport {
  SkeletonReport skeleton;
  std::vector<Cell> cells;
  bool skeleton_positive = false;  // HXE, SQR and HXM+
  bool cells_bruhat = false;       // every cell a Bruhat interval polytope
  bool positive() const { return skeleton_positive && cells_bruhat; }
};

/// Evaluates both sides of the positivity theorem; throws std::logic_error
/// if they disagree.
PositivityReport check_positive_flag(const HeightFunction& w);

/// Flag of corank valuations of the constituent matroids of a cell whose
/// vertices form a flag matroid polytope: M_d has bases {F_d(σ)}.
ValuatedFlagMatroid corank_flag(const std::vector<Permutation>& cell);

}  // namespace permsub
