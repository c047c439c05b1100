#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permsub/rational.hpp"
#include "permsub/subset.hpp"

namespace permsub {

/// Vertex enumeration of the permutahedron is n!; the API stops at 7.
inline constexpr int kMaxPermN = 7;

/// A permutation of [n], read as the vertex (σ(1), ..., σ(n)) of Π_n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(const std::vector<int>& images);
  static Permutation identity(int n);
  /// n, n-1, ..., 1.
  static Permutation longest(int n);
  /// "2134" (n <= 9) or "2,1,3,4".
  static Permutation parse(std::string_view text);

  int n() const { return n_; }
  /// 1-based: σ(p).
  int operator()(int position) const { return images_[position - 1]; }
  std::vector<int> images() const { return {images_.begin(), images_.begin() + n_}; }
  QVector point() const;
  Permutation inverse() const;
  /// Number of inversions (Bruhat rank).
  int length() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::array<std::uint8_t, kMaxPermN> images_{};
  int n_ = 0;
};

/// Sym(n) in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);
/// Position of p in all_permutations(p.n()).
std::size_t permutation_index(const Permutation& p);

/// Strong Bruhat order via the dominance (tableau) criterion.
bool bruhat_leq(const Permutation& a, const Permutation& b);

/// Strictly increasing chain F_1 ⊂ ... ⊂ F_k of nonempty subsets of [n].
struct FaceFlag {
  std::vector<SubsetMask> constituents;

  int n() const { return constituents.empty() ? 0 : constituents.front().n(); }
  bool is_full() const;
  friend bool operator==(const FaceFlag&, const FaceFlag&) = default;
};

/// F_d = positions holding the d largest values.
FaceFlag vertex_to_flag(const Permutation& v);
/// Inverse of vertex_to_flag; throws InputError if the flag is not full.
Permutation flag_to_vertex(const FaceFlag& flag);

enum class TwoFaceKind { Hexagon, Square };

/// A 2-face of Π_n. `chain` is the face flag ending with [n]: its gaps are
/// singletons except one gap of size 3 (hexagon) or two of size 2 (square).
struct TwoFace {
  TwoFaceKind kind = TwoFaceKind::Hexagon;
  std::vector<Permutation> vertices;  // cyclic order
  std::vector<SubsetMask> chain;

  /// Hexagons only: the pair (S, S ∪ {i,j,k}).
  std::pair<SubsetMask, SubsetMask> hexagon_gap() const;
};

/// Every 2-face of Π_n once; cyclic order starts at the lexicographically
/// smallest vertex and continues to its smaller face-neighbour.
std::vector<TwoFace> enumerate_two_faces(int n);

/// Vertex-edge graph with its 2-faces as closed walks.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // first < second
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::size_t>> adjacency;

  /// Index of the undirected edge {a, b}, or npos.
  std::size_t edge_index(std::size_t a, std::size_t b) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Directed skeleton of Π_n: vertices are all_permutations(n); each edge is
/// tagged with the pair (A, B) of differing flag constituents of its ends.
struct PermutahedronGraph : Graph {
  int n = 0;
  std::vector<Permutation> vertices;
  std::vector<std::pair<SubsetMask, SubsetMask>> edge_tags;
};

/// Skeleton of the hypersimplex Δ(d, n); vertices are k_subsets(n, d).
struct HypersimplexGraph : Graph {
  int n = 0;
  int d = 0;
  std::vector<SubsetMask> vertices;
  std::size_t index_of(SubsetMask s) const;
};

PermutahedronGraph permutahedron_graph(int n);
HypersimplexGraph hypersimplex_graph(int d, int n);

/// Vertex permutations (as index maps over all_permutations(n)) generating
/// the automorphism group of Π_n: simple coordinate swaps plus, for n >= 3,
/// the reflection fixing (1, 2, ..., n).
std::vector<std::vector<std::size_t>> symmetry_generators(int n);

/// Order of the permutation group generated by `generators`.
std::size_t group_order(const std::vector<std::vector<std::size_t>>& generators);

}  // namespace permsub
