#include <algorithm>
#include <set>

#include "doctest.h"
#include "permsub/exactgeom.hpp"
#include "permsub/permcore.hpp"

using namespace permsub;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// A reduced word of p as adjacent position swaps applied to the identity.
std::vector<int> reduced_word(const Permutation& p) {
  auto images = p.images();
  std::vector<int> swaps;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      if (images[i] > images[i + 1]) {
        std::swap(images[i], images[i + 1]);
        swaps.push_back(static_cast<int>(i));
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

// Subword property: a <= b iff a is a product of a subword of a reduced word of b.
std::set<std::vector<int>> subword_products(const Permutation& b) {
  const auto word = reduced_word(b);
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    auto images = Permutation::identity(b.n()).images();
    for (std::size_t k = 0; k < word.size(); ++k) {
      if ((mask >> k) & 1u) std::swap(images[word[k]], images[word[k] + 1]);
    }
    out.insert(images);
  }
  return out;
}

std::set<std::vector<std::string>> vertex_sets(const std::vector<TwoFace>& faces, TwoFaceKind kind) {
  std::set<std::vector<std::string>> out;
  for (const auto& f : faces) {
    if (f.kind != kind) continue;
    std::vector<std::string> names;
    for (const auto& v : f.vertices) names.push_back(v.to_string());
    std::sort(names.begin(), names.end());
    out.insert(names);
  }
  return out;
}

}  // namespace

TEST_CASE("reduced words reproduce the permutation") {
  for (const auto& p : all_permutations(4)) {
    auto images = Permutation::identity(4).images();
    for (int s : reduced_word(p)) std::swap(images[s], images[s + 1]);
    CHECK(images == p.images());
    CHECK(static_cast<int>(reduced_word(p).size()) == p.length());
  }
}

TEST_CASE("bruhat_leq agrees with the subword oracle for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& b : perms) {
      const auto below = subword_products(b);
      for (const auto& a : perms) CHECK(bruhat_leq(a, b) == (below.count(a.images()) == 1));
    }
  }
}

TEST_CASE("bruhat_leq examples") {
  for (const auto& p : all_permutations(3)) {
    CHECK(bruhat_leq(Permutation::identity(3), p));
    CHECK(bruhat_leq(p, P("321")));
  }
  CHECK_FALSE(bruhat_leq(P("213"), P("132")));
  CHECK_FALSE(bruhat_leq(P("132"), P("213")));
  CHECK_THROWS_AS(bruhat_leq(P("12"), P("123")), InputError);
}

TEST_CASE("bruhat_leq is a partial order for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    const std::size_t m = perms.size();
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) le[i][j] = bruhat_leq(perms[i], perms[j]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      ok = ok && le[i][i];
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && le[i][j] && le[j][i]) ok = false;
        if (!le[i][j]) continue;
        for (std::size_t k = 0; k < m; ++k) {
          if (le[j][k] && !le[i][k]) ok = false;
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("vertex_to_flag examples and round trip") {
  auto flag = vertex_to_flag(P("123"));
  CHECK(flag.constituents == std::vector<SubsetMask>{SubsetMask::parse("3", 3), SubsetMask::parse("23", 3),
                                                     SubsetMask::parse("123", 3)});
  flag = vertex_to_flag(P("213"));
  CHECK(flag.constituents == std::vector<SubsetMask>{SubsetMask::parse("3", 3), SubsetMask::parse("13", 3),
                                                     SubsetMask::parse("123", 3)});
  for (int n = 1; n <= 6; ++n) {
    auto decreasing = vertex_to_flag(Permutation::longest(n));
    for (int d = 1; d <= n; ++d) CHECK(decreasing.constituents[d - 1] == SubsetMask((1u << d) - 1u, n));
    for (const auto& p : all_permutations(n)) {
      auto f = vertex_to_flag(p);
      CHECK(f.is_full());
      CHECK(flag_to_vertex(f) == p);
    }
  }
}

TEST_CASE("flag_to_vertex rejects partial flags") {
  FaceFlag partial{{SubsetMask::parse("1", 3), SubsetMask::parse("123", 3)}};
  CHECK_THROWS_AS(flag_to_vertex(partial), InputError);
}

TEST_CASE("two-faces of Pi_3") {
  auto faces = enumerate_two_faces(3);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].kind == TwoFaceKind::Hexagon);
  std::vector<std::string> order;
  for (const auto& v : faces[0].vertices) order.push_back(v.to_string());
  CHECK(order == std::vector<std::string>{"123", "132", "231", "321", "312", "213"});
  CHECK_THROWS_AS(enumerate_two_faces(2), InputError);
}

TEST_CASE("two-faces of Pi_4: 8 hexagons and 6 squares") {
  auto faces = enumerate_two_faces(4);
  std::size_t hex = 0, sq = 0;
  for (const auto& f : faces) (f.kind == TwoFaceKind::Hexagon ? hex : sq)++;
  CHECK(hex == 8);
  CHECK(sq == 6);
}

TEST_CASE("two-faces of Pi_5 match the maximiser-set oracle") {
  // maximiser sets of integer functionals c in {0..4}^5 over the 120 vertices
  const int n = 5;
  const auto perms = all_permutations(n);
  std::set<std::vector<std::string>> hexagons, squares;
  std::vector<int> c(n, 0);
  for (int code = 0; code < 3125; ++code) {
    int x = code;
    for (int i = 0; i < n; ++i) {
      c[i] = x % 5;
      x /= 5;
    }
    long best = -1;
    std::vector<std::size_t> argmax;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      long value = 0;
      for (int p = 1; p <= n; ++p) value += static_cast<long>(c[p - 1]) * perms[k](p);
      if (value > best) {
        best = value;
        argmax.clear();
      }
      if (value == best) argmax.push_back(k);
    }
    QMatrix diffs;
    for (auto k : argmax) {
      QVector d;
      for (int p = 1; p <= n; ++p) d.emplace_back(perms[k](p) - perms[argmax[0]](p));
      diffs.push_back(d);
    }
    if (rank(diffs, n) != 2) continue;
    std::vector<std::string> names;
    for (auto k : argmax) names.push_back(perms[k].to_string());
    (argmax.size() == 6 ? hexagons : squares).insert(names);
  }
  auto faces = enumerate_two_faces(n);
  CHECK(hexagons.size() == 60);
  CHECK(squares.size() == 90);
  CHECK(vertex_sets(faces, TwoFaceKind::Hexagon) == hexagons);
  CHECK(vertex_sets(faces, TwoFaceKind::Square) == squares);
}

TEST_CASE("face cycles walk along edges; hexagons are Bruhat intervals") {
  for (int n = 3; n <= 5; ++n) {
    const auto graph = permutahedron_graph(n);
    for (const auto& face : enumerate_two_faces(n)) {
      const auto& vs = face.vertices;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        auto a = permutation_index(vs[i]), b = permutation_index(vs[(i + 1) % vs.size()]);
        CHECK(graph.edge_index(a, b) != Graph::npos);
      }
      if (face.kind != TwoFaceKind::Hexagon) continue;
      std::vector<Permutation> mins, maxs;
      for (const auto& a : vs) {
        bool lo = true, hi = true;
        for (const auto& b : vs) {
          lo = lo && bruhat_leq(a, b);
          hi = hi && bruhat_leq(b, a);
        }
        if (lo) mins.push_back(a);
        if (hi) maxs.push_back(a);
      }
      REQUIRE(mins.size() == 1);
      REQUIRE(maxs.size() == 1);
      std::set<std::string> interval, members;
      for (const auto& p : all_permutations(n)) {
        if (bruhat_leq(mins[0], p) && bruhat_leq(p, maxs[0])) interval.insert(p.to_string());
      }
      for (const auto& v : vs) members.insert(v.to_string());
      CHECK(interval == members);
    }
  }
}

TEST_CASE("skeleton graphs") {
  auto pi3 = permutahedron_graph(3);
  CHECK(pi3.vertex_count == 6);
  CHECK(pi3.edges.size() == 6);
  for (const auto& adj : pi3.adjacency) CHECK(adj.size() == 2);

  auto delta = hypersimplex_graph(1, 4);
  CHECK(delta.vertex_count == 4);
  CHECK(delta.edges.size() == 6);

  auto pi4 = permutahedron_graph(4);
  CHECK(pi4.vertex_count == 24);
  for (const auto& adj : pi4.adjacency) CHECK(adj.size() == 3);
  CHECK(pi4.faces.size() == 14);

  // endpoints of each edge differ in exactly the tagged constituent
  for (std::size_t e = 0; e < pi4.edges.size(); ++e) {
    auto [a, b] = pi4.edges[e];
    auto [sa, sb] = pi4.edge_tags[e];
    CHECK(sa.size() == sb.size());
    CHECK((sa ^ sb).size() == 2);
    auto fa = vertex_to_flag(pi4.vertices[a]), fb = vertex_to_flag(pi4.vertices[b]);
    CHECK(fa.constituents[sa.size() - 1] == sa);
    CHECK(fb.constituents[sb.size() - 1] == sb);
  }
}

TEST_CASE("edges sharing a tag lie on the face of flags through A∩B and A∪B") {
  for (int n = 3; n <= 5; ++n) {
    const auto g = permutahedron_graph(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto [sa, sb] = g.edge_tags[e];
      const auto low = sa & sb, high = sa | sb;
      for (auto v : {g.edges[e].first, g.edges[e].second}) {
        const auto flag = vertex_to_flag(g.vertices[v]);
        const bool has_low = low.size() == 0 || flag.constituents[low.size() - 1] == low;
        CHECK(has_low);
        CHECK(flag.constituents[high.size() - 1] == high);
      }
    }
  }
}

TEST_CASE("hypersimplex triangles") {
  auto g = hypersimplex_graph(2, 4);
  CHECK(g.edges.size() == 12);
  CHECK(g.faces.size() == 8);
  for (const auto& tri : g.faces) {
    REQUIRE(tri.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(g.edge_index(tri[i], tri[(i + 1) % 3]) != Graph::npos);
  }
}

TEST_CASE("automorphism group orders") {
  CHECK(group_order(symmetry_generators(3)) == 12);
  CHECK(group_order(symmetry_generators(4)) == 48);
  CHECK(group_order(symmetry_generators(5)) == 240);
  for (int n = 3; n <= 5; ++n) {
    auto gens = symmetry_generators(n);
    CHECK(gens.back()[permutation_index(Permutation::identity(n))] == permutation_index(Permutation::identity(n)));
  }
}

TEST_CASE("symmetries preserve the edge graph") {
  for (int n = 3; n <= 4; ++n) {
    const auto g = permutahedron_graph(n);
    for (const auto& map : symmetry_generators(n)) {
      for (auto [a, b] : g.edges) CHECK(g.edge_index(map[a], map[b]) != Graph::npos);
    }
  }
}

TEST_CASE("permutation parsing and ordering") {
  CHECK(P("2134").to_string() == "2134");
  CHECK(Permutation::parse("2,1,3").to_string() == "213");
  CHECK(P("321").length() == 3);
  CHECK(P("231").inverse() == P("312"));
  CHECK_THROWS_AS(P("1224"), InputError);
  CHECK_THROWS_AS(P("12345678"), InputError);
  CHECK(permutation_index(P("123")) == 0);
  CHECK(permutation_index(P("321")) == 5);
  const auto perms = all_permutations(4);
  for (std::size_t i = 0; i < perms.size(); ++i) CHECK(permutation_index(perms[i]) == i);
}
