#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "permsub/exactgeom.hpp"
#include "permsub/permcore.hpp"
#include "permsub/subset.hpp"

using namespace permsub;

namespace {

PointConfiguration permutahedron(int n) {
  PointConfiguration c;
  c.dim = static_cast<std::size_t>(n);
  for (const auto& p : all_permutations(n)) c.points.push_back(p.point());
  return c;
}

PointConfiguration hypersimplex(int d, int n) {
  PointConfiguration c;
  c.dim = static_cast<std::size_t>(n);
  for (auto s : k_subsets(n, d)) {
    QVector x;
    for (int e = 1; e <= n; ++e) x.emplace_back(s.contains(e) ? 1 : 0);
    c.points.push_back(x);
  }
  return c;
}

QVector minus(const QVector& a, const QVector& b) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// {a, b} is an edge iff some c has c·a = c·b > c·p for every other point p.
bool edge_oracle(const PointConfiguration& c, std::size_t a, std::size_t b) {
  std::vector<AffineRow> eq{{minus(c.points[a], c.points[b]), 0}};
  std::vector<AffineRow> strict;
  for (std::size_t p = 0; p < c.points.size(); ++p) {
    if (p != a && p != b) strict.push_back({minus(c.points[a], c.points[p]), 0});
  }
  return lp_feasible(eq, strict, {}, c.dim).feasible;
}

// S is a lower cell iff some affine f equals h on S and stays below h elsewhere,
// and S affinely spans the configuration.
std::set<std::vector<std::size_t>> lower_cells_oracle(const PointConfiguration& c, const QVector& h) {
  const std::size_t m = c.points.size();
  QMatrix all;
  for (const auto& p : c.points) all.push_back(minus(p, c.points[0]));
  const std::size_t full = rank(all, c.dim);
  std::set<std::vector<std::size_t>> cells;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) s.push_back(i);
    }
    QMatrix diffs;
    for (auto i : s) diffs.push_back(minus(c.points[i], c.points[s[0]]));
    if (rank(diffs, c.dim) != full) continue;
    // variables (a, b): a·x + b
    std::vector<AffineRow> eq, strict;
    for (std::size_t i = 0; i < m; ++i) {
      QVector row = c.points[i];
      row.emplace_back(1);
      if ((mask >> i) & 1u) {
        eq.push_back({row, -h[i]});
      } else {
        for (auto& x : row) x = -x;
        strict.push_back({row, h[i]});
      }
    }
    if (lp_feasible(eq, strict, {}, c.dim + 1).feasible) cells.insert(s);
  }
  return cells;
}

}  // namespace

TEST_CASE("hull of a triangle") {
  PointConfiguration c{2, {{0, 0}, {1, 0}, {0, 1}}};
  auto h = hull(c);
  CHECK(h.affine_dim == 2);
  CHECK(h.vertices.size() == 3);
  CHECK(h.edges.size() == 3);
}

TEST_CASE("hull of Pi_3 is a hexagon") {
  auto h = hull(permutahedron(3));
  CHECK(h.affine_dim == 2);
  CHECK(h.vertices.size() == 6);
  CHECK(h.edges.size() == 6);
  std::vector<int> degree(6, 0);
  for (auto [a, b] : h.edges) {
    ++degree[a];
    ++degree[b];
  }
  for (int d : degree) CHECK(d == 2);
}

TEST_CASE("hull of Delta(2,4) is an octahedron with root edges") {
  auto c = hypersimplex(2, 4);
  auto h = hull(c);
  CHECK(h.affine_dim == 3);
  CHECK(h.edges.size() == 12);
  CHECK(h.facets.size() == 8);
  for (auto [a, b] : h.edges) {
    auto d = minus(c.points[a], c.points[b]);
    CHECK(std::count(d.begin(), d.end(), Rational(1)) == 1);
    CHECK(std::count(d.begin(), d.end(), Rational(-1)) == 1);
  }
  for (std::size_t a = 0; a < c.points.size(); ++a) {
    for (std::size_t b = a + 1; b < c.points.size(); ++b) {
      bool listed = std::find(h.edges.begin(), h.edges.end(), std::make_pair(a, b)) != h.edges.end();
      CHECK(listed == edge_oracle(c, a, b));
    }
  }
}

TEST_CASE("hull of Pi_4: 24 vertices, 36 edges, 14 facets") {
  auto h = hull(permutahedron(4));
  CHECK(h.vertices.size() == 24);
  CHECK(h.edges.size() == 36);
  CHECK(h.facets.size() == 14);
}

TEST_CASE("degenerate and repeated points") {
  PointConfiguration c{2, {{1, 1}, {1, 1}}};
  auto h = hull(c);
  CHECK(h.degenerate);
  CHECK(h.vertices == std::vector<std::size_t>{0});
  PointConfiguration seg{2, {{0, 0}, {1, 1}, {2, 2}, {1, 1}}};
  auto s = hull(seg);
  CHECK(s.vertices == std::vector<std::size_t>{0, 2});
  CHECK(s.edges.size() == 1);
}

TEST_CASE("hull edges agree with the LP oracle on random 0/1 configurations") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 2 + rng() % 3;
    const std::size_t count = 3 + rng() % 10;
    std::set<QVector> pts;
    while (pts.size() < std::min<std::size_t>(count, std::size_t{1} << dim)) {
      QVector x;
      for (std::size_t i = 0; i < dim; ++i) x.emplace_back(static_cast<int>(rng() % 2));
      pts.insert(x);
    }
    PointConfiguration c{dim, {pts.begin(), pts.end()}};
    auto h = hull(c);
    CHECK(h.vertices.size() == c.points.size());
    for (std::size_t a = 0; a < c.points.size(); ++a) {
      for (std::size_t b = a + 1; b < c.points.size(); ++b) {
        bool listed = std::find(h.edges.begin(), h.edges.end(), std::make_pair(a, b)) != h.edges.end();
        CHECK(listed == edge_oracle(c, a, b));
      }
    }
  }
}

TEST_CASE("lower_cells: trivial, running example and split") {
  auto pi3 = permutahedron(3);
  auto cells = lower_cells(pi3, QVector(6, Rational(0)));
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].size() == 6);

  // order: 123 132 213 231 312 321
  auto example = lower_cells(pi3, {4, 2, 5, 2, 4, 3});
  CHECK(example == std::vector<std::vector<std::size_t>>{{0, 1, 2, 4}, {1, 3, 4, 5}});

  auto d24 = hypersimplex(2, 4);  // 12 13 14 23 24 34
  QVector split{1, 0, 0, 0, 0, 1};
  auto s = lower_cells(d24, split);
  CHECK(s.size() == 2);
  auto oracle = lower_cells_oracle(d24, split);
  CHECK(std::set<std::vector<std::size_t>>(s.begin(), s.end()) == oracle);
}

TEST_CASE("lower_cells agree with the brute-force oracle on random heights") {
  std::mt19937 rng(7);
  auto d24 = hypersimplex(2, 4);
  auto pi3 = permutahedron(3);
  for (int trial = 0; trial < 30; ++trial) {
    for (auto* c : {&d24, &pi3}) {
      QVector h;
      for (std::size_t i = 0; i < c->points.size(); ++i) h.emplace_back(static_cast<int>(rng() % 4));
      auto cells = lower_cells(*c, h);
      CHECK(std::set<std::vector<std::size_t>>(cells.begin(), cells.end()) == lower_cells_oracle(*c, h));
      std::set<std::size_t> covered;
      for (const auto& cell : cells) covered.insert(cell.begin(), cell.end());
      CHECK(covered.size() == c->points.size());
    }
  }
}

TEST_CASE("cone_solve examples") {
  auto line = cone_solve({{1, 0}}, {}, 2);
  CHECK(line.dimension == 1);
  CHECK(line.lineality_dim == 1);
  CHECK(line.rays.empty());
  CHECK(line.trivial());

  auto quadrant = cone_solve({}, {{1, 0}, {0, 1}}, 2);
  CHECK(quadrant.dimension == 2);
  CHECK(quadrant.lineality_dim == 0);
  CHECK(quadrant.rays == QMatrix{{0, 1}, {1, 0}});

  // cone over a square: four rays
  auto square = cone_solve({}, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}}, 3);
  CHECK(square.rays.size() == 4);
  CHECK(square.dimension == 3);
}

TEST_CASE("cone_solve on the Pi_3 system of one HXE equality and one diagonal choice") {
  // coordinates 123 132 213 231 312 321; hexagon order 123,132,231,321,312,213
  QVector hxe{1, -1, -1, 1, 1, -1};
  QVector d0{1, 0, 0, 0, 0, 1}, d1{0, 1, 0, 0, 1, 0}, d2{0, 0, 1, 1, 0, 0};
  auto diff = [](const QVector& a, const QVector& b) {
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
  };
  auto cone = cone_solve({hxe, diff(d0, d2)}, {diff(d0, d1), diff(d2, d1)}, 6);
  CHECK(cone.dimension == 4);
  CHECK(cone.lineality_dim == 3);
  CHECK(cone.rays.size() == 1);
  QVector ones(6, Rational(1));
  auto normalized = cone_solve({hxe, diff(d0, d2), ones}, {diff(d0, d1), diff(d2, d1)}, 6);
  CHECK(normalized.dimension == 3);
  CHECK(normalized.lineality_dim == 2);
  CHECK(normalized.rays.size() == 1);
  CHECK(normalized.rays == cone.rays);
}

TEST_CASE("canonical keys ignore row order and scaling") {
  std::mt19937 rng(11);
  QMatrix eqs{{1, 1, 1, 1}};
  QMatrix ineqs{{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {1, 0, 0, -1}};
  auto base = cone_solve(eqs, ineqs, 4);
  for (int trial = 0; trial < 10; ++trial) {
    auto shuffled = ineqs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& row : shuffled) {
      const Rational k(static_cast<int>(1 + rng() % 5), static_cast<int>(1 + rng() % 3));
      for (auto& x : row) x *= k;
    }
    auto e2 = eqs;
    for (auto& x : e2[0]) x *= -3;
    CHECK(cone_solve(e2, shuffled, 4).key == base.key);
  }
  auto other = cone_solve(eqs, {{1, -1, 0, 0}, {0, 1, -1, 0}}, 4);
  CHECK(other.key != base.key);
}

TEST_CASE("cone rays are primitive and orthogonal to the lineality") {
  auto cone = cone_solve({}, {{1, 1, 0}, {1, -1, 0}}, 3);
  CHECK(cone.lineality_dim == 1);
  for (const auto& r : cone.rays) {
    CHECK(primitive(r) == r);
    for (const auto& l : cone.lineality) CHECK(dot(r, l) == 0);
    CHECK(cone.contains(r));
  }
}

TEST_CASE("lp_feasible examples") {
  // x >= 1 and x <= 0
  CHECK_FALSE(lp_feasible({}, {}, {{{1}, -1}, {{-1}, 0}}, 1).feasible);
  auto r = lp_feasible({}, {{{1}, 0}}, {}, 1);
  CHECK(r.feasible);
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness[0] > 0);
  // x + y = 1, x > 0, y > 0
  auto s = lp_feasible({{{1, 1}, -1}}, {{{1, 0}, 0}, {{0, 1}, 0}}, {}, 2);
  CHECK(s.feasible);
  CHECK(s.witness[0] + s.witness[1] == 1);
  CHECK(s.witness[0] > 0);
  CHECK(s.witness[1] > 0);
  // x > 0 and -x > 0
  CHECK_FALSE(lp_feasible({}, {{{1}, 0}, {{-1}, 0}}, {}, 1).feasible);
  CHECK_THROWS_AS(lp_feasible({}, {{{1, 2}, 0}}, {}, 1), InputError);
}

TEST_CASE("matrix_to_json") {
  CHECK(matrix_to_json({{Rational(1, 2), 3}}) == R"([["1/2","3"]])");
}
