#include "permsub/io.hpp"

#include <cstdio>
#include <set>

namespace permsub {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_member(const Json& j, const char* key, const std::string& where, int lo, int hi) {
  const Json& v = member(j, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > hi) fail(where + "." + key, "must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(x);
}

Json permutation_list(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json index_lists(const std::vector<std::vector<std::size_t>>& lists) {
  Json out = Json::array();
  for (const auto& l : lists) out.push_back(l);
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

Json rational_to_json(const Rational& q) { return to_string(q); }

ValuatedMatroid matroid_from_json(const Json& j, const std::string& where) {
  const int n = int_member(j, "n", where, 1, kMaxGround);
  const int d = int_member(j, "d", where, 0, n);
  const Json& values = member(j, "values", where);
  if (!values.is_object()) fail(where + ".values", "expected an object keyed by subsets");
  ValuatedMatroid mu(n, d);
  std::set<std::uint32_t> seen;
  for (const auto& [key, value] : values.items()) {
    const std::string at = where + ".values." + key;
    SubsetMask s;
    try {
      s = SubsetMask::parse(key, n);
    } catch (const InputError& e) {
      fail(at, e.what());
    }
    if (s.size() != d) fail(at, "subset must have " + std::to_string(d) + " elements");
    if (!seen.insert(s.bits()).second) fail(at, "subset listed twice");
    if (value.is_null()) continue;
    mu.set(s, rational_from_json(value, at));
  }
  return mu;
}

Json matroid_to_json(const ValuatedMatroid& mu) {
  Json values = Json::object();
  for (const auto& [s, v] : mu.entries()) values[s.to_string()] = rational_to_json(v);
  return Json{{"n", mu.n()}, {"d", mu.rank()}, {"values", std::move(values)}};
}

ValuatedFlagMatroid flag_from_json(const Json& j, const std::string& where) {
  const Json* list = &j;
  std::string at = where;
  if (j.is_object()) {
    list = &member(j, "flag", where);
    at += ".flag";
  }
  if (!list->is_array()) fail(at, "expected a list of valuated matroids");
  ValuatedFlagMatroid flag;
  for (std::size_t i = 0; i < list->size(); ++i) {
    flag.ranks.push_back(matroid_from_json((*list)[i], at + "[" + std::to_string(i) + "]"));
  }
  try {
    validate_flag_shape(flag);
  } catch (const InputError& e) {
    fail(at, e.what());
  }
  return flag;
}

Json flag_to_json(const ValuatedFlagMatroid& flag) {
  Json out = Json::array();
  for (const auto& mu : flag.ranks) out.push_back(matroid_to_json(mu));
  return out;
}

HeightFunction heights_from_json(const Json& j, const std::string& where) {
  const int n = int_member(j, "n", where, 1, kMaxPermN);
  const Json& heights = member(j, "heights", where);
  if (!heights.is_object()) fail(where + ".heights", "expected an object keyed by permutations");
  const auto perms = all_permutations(n);
  std::vector<std::optional<Rational>> values(perms.size());
  for (const auto& [key, value] : heights.items()) {
    const std::string at = where + ".heights." + key;
    Permutation p;
    try {
      p = Permutation::parse(key);
    } catch (const InputError& e) {
      fail(at, e.what());
    }
    if (p.n() != n) fail(at, "permutation of the wrong size");
    auto& slot = values[permutation_index(p)];
    if (slot) fail(at, "vertex listed twice");
    slot = rational_from_json(value, at);
  }
  HeightFunction w;
  w.n = n;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (!values[i]) fail(where + ".heights", "missing vertex " + perms[i].to_string());
    w.values.push_back(*values[i]);
  }
  return w;
}

Json heights_to_json(const HeightFunction& w) {
  Json heights = Json::object();
  const auto perms = all_permutations(w.n);
  for (std::size_t i = 0; i < perms.size(); ++i) heights[perms[i].to_string()] = rational_to_json(w.values[i]);
  return Json{{"n", w.n}, {"heights", std::move(heights)}};
}

TMatrix tmatrix_from_json(const Json& j, const std::string& where) {
  const Json* rows = &j;
  std::string at = where;
  if (j.is_object()) {
    rows = &member(j, "matrix", where);
    at += ".matrix";
  }
  if (!rows->is_array() || rows->empty()) fail(at, "expected a nonempty list of rows");
  TMatrix a;
  for (std::size_t r = 0; r < rows->size(); ++r) {
    const Json& row = (*rows)[r];
    const std::string rat = at + "[" + std::to_string(r) + "]";
    if (!row.is_array()) fail(rat, "expected a row of entries");
    std::vector<PolyInT> out_row;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Json& entry = row[c];
      const std::string eat = rat + "[" + std::to_string(c) + "]";
      if (!entry.is_array()) fail(eat, "expected a list of [exponent, coefficient] pairs");
      std::vector<std::pair<long, Rational>> terms;
      for (std::size_t t = 0; t < entry.size(); ++t) {
        const Json& term = entry[t];
        const std::string tat = eat + "[" + std::to_string(t) + "]";
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
          fail(tat, "expected [exponent, \"p/q\"]");
        }
        terms.emplace_back(term[0].get<long>(), rational_from_json(term[1], tat + "[1]"));
      }
      out_row.emplace_back(std::move(terms));
    }
    if (!a.empty() && out_row.size() != a.front().size()) fail(rat, "rows have different lengths");
    a.push_back(std::move(out_row));
  }
  return a;
}

Json tmatrix_to_json(const TMatrix& a) {
  Json rows = Json::array();
  for (const auto& row : a) {
    Json r = Json::array();
    for (const auto& entry : row) {
      Json e = Json::array();
      for (const auto& [exp, coeff] : entry.terms()) e.push_back(Json::array({exp, rational_to_json(coeff)}));
      r.push_back(std::move(e));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

Json violation_to_json(const Violation& v) {
  Json terms = Json::array();
  for (const auto& t : v.terms) terms.push_back(t ? rational_to_json(*t) : Json("inf"));
  return Json{{"relation", v.relation},
              {"S", v.s.to_string()},
              {"indices", v.indices},
              {"terms", std::move(terms)},
              {"detail", v.detail}};
}

Json check_to_json(const CheckResult& r) {
  Json out{{"pass", r.pass()}, {"relations_checked", r.relations_checked}};
  out["violation"] = r.violation ? violation_to_json(*r.violation) : Json(nullptr);
  return out;
}

Json cell_to_json(const Cell& c) {
  Json out{{"vertices", permutation_list(c.vertices)},
           {"generalized_permutahedron", c.generalized_permutahedron},
           {"bruhat_interval", c.bruhat.is_interval}};
  if (c.bruhat.endpoints) {
    out["interval"] = Json::array({c.bruhat.endpoints->first.to_string(), c.bruhat.endpoints->second.to_string()});
  } else {
    out["interval"] = nullptr;
  }
  return out;
}

Json skeleton_to_json(const SkeletonReport& r) {
  Json hexagons = Json::array();
  for (const auto& hx : r.hexagons) {
    const auto& vs = r.faces[hx.face].vertices;
    Json diagonals = Json::array();
    for (int t = 0; t < 3; ++t) {
      diagonals.push_back(Json{{"ends", vs[t].to_string() + "/" + vs[t + 3].to_string()},
                               {"sum", rational_to_json(hx.diagonals[t])},
                               {"attains_max", std::find(hx.attaining.begin(), hx.attaining.end(), t) != hx.attaining.end()}});
    }
    hexagons.push_back(Json{{"vertices", permutation_list(vs)},
                            {"alternating", Json::array({rational_to_json(hx.alternating[0]), rational_to_json(hx.alternating[1])})},
                            {"diagonals", std::move(diagonals)},
                            {"bruhat_minimal", vs[static_cast<std::size_t>(hx.minimal_vertex)].to_string()},
                            {"hxe", hx.hxe},
                            {"hxm", hx.hxm},
                            {"hxm_plus", hx.hxm_plus}});
  }
  Json squares = Json::array();
  for (const auto& sq : r.squares) {
    squares.push_back(Json{{"vertices", permutation_list(r.faces[sq.face].vertices)},
                           {"sums", Json::array({rational_to_json(sq.sums[0]), rational_to_json(sq.sums[1])})},
                           {"sqr", sq.sqr}});
  }
  return Json{{"n", r.n},
              {"hexagons", std::move(hexagons)},
              {"squares", std::move(squares)},
              {"verdicts",
               {{"hxe", r.hxe},
                {"hxm", r.hxm},
                {"sqr", r.sqr},
                {"hxm_plus", r.hxm_plus},
                {"permutahedral", r.permutahedral()},
                {"positive", r.positive()}}}};
}

Json tropicalization_to_json(const Tropicalization& t) {
  Json flag = Json::array();
  Json signs = Json::array();
  Json zeros = Json::array();
  for (std::size_t i = 0; i < t.flag.size(); ++i) {
    flag.push_back(matroid_to_json(t.flag[i]));
    Json s = Json::object();
    for (const auto& [set, sign] : t.signs[i]) s[set.to_string()] = sign > 0 ? "+" : "-";
    signs.push_back(std::move(s));
    Json z = Json::array();
    for (const auto& set : t.zero_minors[i]) z.push_back(set.to_string());
    zeros.push_back(std::move(z));
  }
  return Json{{"flag", std::move(flag)}, {"signs", std::move(signs)}, {"zero_minors", std::move(zeros)}};
}

Json vector_to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Json fan_to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(vector_to_json(r));
  Json lineality = Json::array();
  for (const auto& r : fan.lineality) lineality.push_back(vector_to_json(r));
  Json cones = Json::array();
  for (std::size_t k = 0; k < fan.cones.size(); ++k) {
    cones.push_back(Json{{"dimension", k + 1}, {"cones", index_lists(fan.cones[k])}});
  }
  Json coordinates = Json::array();
  for (const auto& p : all_permutations(fan.n)) coordinates.push_back(p.to_string());
  return Json{{"n", fan.n},
              {"ambient", fan.ambient},
              {"coordinates", std::move(coordinates)},
              {"normalization", "sum of heights is zero"},
              {"sign_choices", fan.sign_choices},
              {"lineality_dim", fan.lineality_dim},
              {"lineality", std::move(lineality)},
              {"rays", std::move(rays)},
              {"cones", std::move(cones)},
              {"maximal", index_lists(fan.maximal)}};
}

Json census_to_json(const FanCensus& c) {
  Json by_rays = Json::object();
  for (std::size_t k = 0; k < c.maximal_by_ray_count.size(); ++k) {
    if (c.maximal_by_ray_count[k] != 0) by_rays[std::to_string(k)] = c.maximal_by_ray_count[k];
  }
  return Json{{"f_vector", c.f_vector}, {"maximal_by_ray_count", std::move(by_rays)}, {"simplicial", c.simplicial}};
}

Json homology_to_json(const Homology& h) {
  return Json{{"betti", h.betti}, {"euler_characteristic", h.euler}, {"coefficients", "rational"}};
}

Json refinement_to_json(const RefinementCensus& r) {
  Json cones = Json::array();
  for (const auto& c : r.cones) {
    Json subdivisions = Json::array();
    for (const auto& s : c.subdivisions) subdivisions.push_back(index_lists(s));
    cones.push_back(Json{{"cone", c.cone},
                         {"rays", c.ray_count},
                         {"samples", c.samples.size()},
                         {"distinct_subdivisions", c.subdivisions.size()},
                         {"patterns_equal", c.patterns_equal},
                         {"samples_permutahedral", c.samples_permutahedral},
                         {"subdivisions", std::move(subdivisions)}});
  }
  return Json{{"total", r.total}, {"discrepancies", r.discrepancies}, {"cones", std::move(cones)}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace permsub
