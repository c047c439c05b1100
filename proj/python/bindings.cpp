// Python module permsub._core. Structured values cross the boundary as JSON
// text in the same schemas as the command-line tool; the Python package
// converts them to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permsub/fanenum.hpp"
#include "permsub/flagsub.hpp"
#include "permsub/io.hpp"
#include "permsub/valmat.hpp"

namespace py = pybind11;
using namespace permsub;

namespace {

std::string dump(const Json& j) { return j.dump(); }

ValuatedMatroid matroid(const std::string& text) { return matroid_from_json(parse_json(text)); }
ValuatedFlagMatroid flag(const std::string& text) { return flag_from_json(parse_json(text)); }
HeightFunction heights(const std::string& text) { return heights_from_json(parse_json(text)); }

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back(cell_to_json(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Valuated flag matroids and permutahedral subdivisions";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  m.attr("FORMAT_VERSION") = kFormatVersion;

  m.def("check_plucker", [](const std::string& mu) { return dump(check_to_json(check_plucker(matroid(mu)))); });
  m.def("check_incidence", [](const std::string& mu, const std::string& nu) {
    return dump(check_to_json(check_incidence(matroid(mu), matroid(nu))));
  });
  m.def("check_positive_plucker",
        [](const std::string& mu) { return dump(check_to_json(check_positive_plucker(matroid(mu)))); });
  m.def("check_positive_incidence", [](const std::string& nu, const std::string& mu) {
    return dump(check_to_json(check_positive_incidence(matroid(nu), matroid(mu))));
  });
  m.def("check_flag", [](const std::string& f) { return dump(check_to_json(check_flag(flag(f)))); });

  m.def("truncate", [](const std::string& mu) { return dump(matroid_to_json(truncate(matroid(mu)))); });
  m.def("elongate", [](const std::string& mu) { return dump(matroid_to_json(elongate(matroid(mu)))); });

  m.def("tropicalize", [](const std::string& matrix, int rows) {
    const auto a = tmatrix_from_json(parse_json(matrix));
    if (rows == 0) rows = static_cast<int>(std::min(a.size(), a.front().size()));
    return dump(tropicalization_to_json(tropicalize_matrix(a, rows)));
  }, py::arg("matrix"), py::arg("rows") = 0);

  m.def("compress", [](const std::string& f) { return dump(heights_to_json(compress_on_vertices(flag(f)))); });
  m.def("compress_point", [](const std::string& f, const std::vector<int>& x) -> std::optional<std::string> {
    const auto v = compress(flag(f), x);
    if (!v) return std::nullopt;
    return to_string(*v);
  });

  m.def("subdivide", [](const std::string& w) { return dump(cells_json(subdivide(heights(w)))); });
  m.def("skeleton", [](const std::string& w) { return dump(skeleton_to_json(check_two_skeleton(heights(w)))); });
  m.def("check_positive_flag", [](const std::string& w) {
    const auto r = check_positive_flag(heights(w));
    return dump(Json{{"pass", r.positive()},
                     {"skeleton_positive", r.skeleton_positive},
                     {"cells_bruhat", r.cells_bruhat},
                     {"cells", cells_json(r.cells)}});
  });
  m.def("decompose", [](const std::string& w) {
    const auto d = decompose_height(heights(w));
    if (!d.flag) return dump(Json{{"flag", nullptr}, {"failure", d.failure}});
    return dump(Json{{"flag", flag_to_json(*d.flag)}, {"failure", nullptr}});
  });
  m.def("lift", [](const std::string& f) {
    const auto lift = lift_to_grassmannian(flag(f));
    return dump(Json{{"alpha", rational_to_json(lift.alpha)},
                     {"convexity_defect", rational_to_json(lift.convexity_defect)},
                     {"lift", matroid_to_json(lift.mu)}});
  });

  m.def("fan", [](int n, bool homology, bool refinement, unsigned threads) {
    Fan fan;
    {
      py::gil_scoped_release release;
      fan = enumerate_fan(n, threads);
    }
    Json out{{"fan", fan_to_json(fan)}, {"census", census_to_json(f_vector_census(fan))}};
    if (homology) out["homology"] = homology_to_json(link_homology(fan));
    if (refinement) {
      py::gil_scoped_release release;
      out["refinement"] = refinement_to_json(refinement_census(fan, threads));
    }
    return dump(out);
  }, py::arg("n"), py::arg("homology") = false, py::arg("refinement") = false, py::arg("threads") = 0);

  m.def("bruhat_leq", [](const std::string& a, const std::string& b) {
    return bruhat_leq(Permutation::parse(a), Permutation::parse(b));
  });
  m.def("permutations", [](int n) {
    std::vector<std::string> out;
    for (const auto& p : all_permutations(n)) out.push_back(p.to_string());
    return out;
  });
}
