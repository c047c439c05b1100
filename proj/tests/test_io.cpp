#include "doctest.h"
#include "permsub/io.hpp"

using namespace permsub;

TEST_CASE("rationals in JSON") {
  CHECK(rational_from_json(Json("3/6"), "$") == Rational(1, 2));
  CHECK(rational_from_json(Json(-4), "$") == -4);
  CHECK(rational_to_json(Rational(-6, 4)) == Json("-3/2"));
  CHECK_THROWS_AS(rational_from_json(Json(0.5), "$"), InputError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0"), "$"), InputError);
}

TEST_CASE("matroid JSON round trip") {
  auto mu = ValuatedMatroid::uniform(4, 2, {Rational(1, 3), 0, 2, -1, 5, 7});
  mu.erase(SubsetMask::parse("34", 4));
  auto j = matroid_to_json(mu);
  CHECK(j["values"].size() == 5);
  CHECK(j["values"]["12"] == "1/3");
  CHECK(matroid_from_json(parse_json(j.dump())) == mu);
  auto nulls = parse_json(R"({"n":3,"d":1,"values":{"1":"0","2":null,"3":2}})");
  auto m = matroid_from_json(nulls);
  CHECK_FALSE(m.value(SubsetMask::parse("2", 3)).has_value());
  CHECK(*m.value(SubsetMask::parse("3", 3)) == 2);
}

TEST_CASE("matroid JSON errors carry a location") {
  auto expect_error = [](const char* text, const char* fragment) {
    try {
      matroid_from_json(parse_json(text));
      FAIL("accepted " << text);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error(R"({"d":1,"values":{}})", "missing field 'n'");
  expect_error(R"({"n":3,"d":4,"values":{}})", "$.d");
  expect_error(R"({"n":3,"d":1,"values":{"12":"0"}})", "$.values.12");
  expect_error(R"({"n":3,"d":2,"values":{"13":"0","1,3":"1"}})", "listed twice");
  expect_error(R"({"n":3,"d":1,"values":{"4":"0"}})", "$.values.4");
  expect_error(R"({"n":3,"d":1,"values":[]})", "$.values");
  CHECK_THROWS_AS(parse_json("{"), InputError);
}

TEST_CASE("flag JSON") {
  ValuatedFlagMatroid f{{ValuatedMatroid::uniform(3, 1, {1, 0, 2}), ValuatedMatroid::uniform(3, 2, {1, 2, 1}),
                         ValuatedMatroid::uniform(3, 3, {1})}};
  auto j = flag_to_json(f);
  auto back = flag_from_json(parse_json(j.dump()));
  CHECK(back.ranks == f.ranks);
  auto wrapped = flag_from_json(Json{{"flag", j}});
  CHECK(wrapped.ranks == f.ranks);
  Json short_flag = Json::array({j[0], j[2]});
  CHECK_THROWS_AS(flag_from_json(short_flag), InputError);
}

TEST_CASE("heights JSON") {
  auto w = HeightFunction::zero(3);
  w.set(Permutation::parse("213"), Rational(5, 2));
  auto j = heights_to_json(w);
  CHECK(j["heights"]["213"] == "5/2");
  CHECK(heights_from_json(parse_json(j.dump())) == w);
  auto missing = j;
  missing["heights"].erase("321");
  CHECK_THROWS_AS(heights_from_json(missing), InputError);
  auto wrong = parse_json(R"({"n":2,"heights":{"12":"0","21":"0","123":"1"}})");
  CHECK_THROWS_AS(heights_from_json(wrong), InputError);
  auto twice = parse_json(R"({"n":2,"heights":{"12":"0","1,2":"0","21":"1"}})");
  CHECK_THROWS_AS(heights_from_json(twice), InputError);
}

TEST_CASE("matrix JSON") {
  auto j = parse_json(R"({"matrix":[[[[1,"1"]],[[0,"1"]]],[[],[[0,"1"],[2,"-1/2"]]]]})");
  auto a = tmatrix_from_json(j);
  REQUIRE(a.size() == 2);
  CHECK(a[0][0] == PolyInT::monomial(1, 1));
  CHECK(a[1][0].is_zero());
  CHECK(a[1][1] == PolyInT({{0, 1}, {2, Rational(-1, 2)}}));
  CHECK(tmatrix_from_json(tmatrix_to_json(a)) == a);
  CHECK_THROWS_AS(tmatrix_from_json(parse_json(R"([[[[1]]]])")), InputError);
  CHECK_THROWS_AS(tmatrix_from_json(parse_json(R"([[[]],[[],[]]])")), InputError);
  CHECK_THROWS_AS(tmatrix_from_json(parse_json(R"([])")), InputError);
}

TEST_CASE("report serializers") {
  auto r = check_plucker(ValuatedMatroid::uniform(4, 2, {0, 1, 1, 1, 1, 0}));
  auto j = check_to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["violation"]["S"] == "");
  auto h = homology_to_json(Homology{{1, 0, 18}, 19});
  CHECK(h["betti"] == Json::array({1, 0, 18}));
  CHECK(vector_to_json({Rational(1, 2), 0}) == Json::array({"1/2", "0"}));
}

TEST_CASE("fnv1a digest") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
