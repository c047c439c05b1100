#include "doctest.h"
#include "permsub/linalg.hpp"
#include "permsub/rational.hpp"
#include "permsub/subset.hpp"

using namespace permsub;

TEST_CASE("parse_rational accepts canonical and integer forms") {
  CHECK(parse_rational("4") == 4);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(to_string(parse_rational("8/4")) == "2");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
}

TEST_CASE("parse_rational rejects garbage") {
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("0.5"), InputError);
  CHECK_THROWS_AS(parse_rational("a/b"), InputError);
}

TEST_CASE("ceil and primitive") {
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(ceil(Rational(3)) == 3);
  QVector v{Rational(1, 2), Rational(-3, 4), Rational(0)};
  CHECK(primitive(v) == QVector{2, -3, 0});
  QVector zero{0, 0};
  CHECK(primitive(zero) == zero);
}

TEST_CASE("SubsetMask basics") {
  auto s = SubsetMask::parse("134", 4);
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.to_string() == "134");
  CHECK(SubsetMask::parse("1,3,4", 4) == s);
  CHECK(s.without(3).with(2).to_string() == "124");
  CHECK(SubsetMask::full(3).minus(s).elements() == std::vector<int>{2});
  CHECK_THROWS_AS(SubsetMask::parse("15", 4), InputError);
}

TEST_CASE("k_subsets are lexicographic") {
  auto subsets = k_subsets(4, 2);
  std::vector<std::string> names;
  for (auto s : subsets) names.push_back(s.to_string());
  CHECK(names == std::vector<std::string>{"12", "13", "14", "23", "24", "34"});
  CHECK(k_subsets(5, 0).size() == 1);
  CHECK(k_subsets(6, 3).size() == 20);
}

TEST_CASE("rref, rank and nullspace") {
  QMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m, 3) == 2);
  auto null = nullspace(m, 3);
  REQUIRE(null.size() == 1);
  for (const auto& row : m) CHECK(dot(row, null[0]) == 0);
  CHECK(solve_square({{2, 1}, {1, 3}}, {3, 5}) == QVector{Rational(4, 5), Rational(7, 5)});
  CHECK(independent_rows(m, 3) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("orthogonal projection") {
  auto basis = orthogonal_basis({{1, 1, 0}, {1, 0, 1}});
  REQUIRE(basis.size() == 2);
  CHECK(dot(basis[0], basis[1]) == 0);
  auto v = project_out({1, 2, 3}, basis);
  for (const auto& b : basis) CHECK(dot(v, b) == 0);
}
