// permsub command-line interface.
//
// Exit codes: 0 success, 1 mathematical failure (a violation or failed
// certification), 2 input error, 3 internal inconsistency.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "permsub/fanenum.hpp"
#include "permsub/flagsub.hpp"
#include "permsub/io.hpp"
#include "permsub/valmat.hpp"

using namespace permsub;

namespace {

struct Options {
  std::string output;
  unsigned threads = 0;
  std::string format = "json";
  bool timing = false;
};

struct Outcome {
  Json body;
  int exit_code = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Input {
  std::string bytes;
  Json json;
};

Input load(const std::string& path) {
  Input in;
  in.bytes = read_file(path);
  in.json = parse_json(in.bytes);
  return in;
}

std::pair<ValuatedMatroid, ValuatedMatroid> load_pair(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("$: expected two valuated matroids");
    return {matroid_from_json(j[0], "$[0]"), matroid_from_json(j[1], "$[1]")};
  }
  if (!j.is_object() || !j.contains("mu") || !j.contains("nu")) {
    throw InputError("$: expected {\"mu\": ..., \"nu\": ...}");
  }
  return {matroid_from_json(j["mu"], "$.mu"), matroid_from_json(j["nu"], "$.nu")};
}

Outcome run_check(const std::string& kind, const Input& in) {
  Outcome out;
  const Json& j = in.json;
  CheckResult result;
  if (kind == "plucker") {
    result = check_plucker(matroid_from_json(j));
  } else if (kind == "incidence") {
    auto [mu, nu] = load_pair(j);
    result = check_incidence(mu, nu);
  } else if (kind == "flag") {
    result = check_flag(flag_from_json(j));
  } else if (kind == "positive") {
    if (j.is_object() && j.contains("heights")) {
      const auto report = check_positive_flag(heights_from_json(j));
      Json cells = Json::array();
      for (const auto& c : report.cells) cells.push_back(cell_to_json(c));
      out.body["result"] = Json{{"pass", report.positive()},
                                {"skeleton_positive", report.skeleton_positive},
                                {"cells_bruhat", report.cells_bruhat},
                                {"cells", std::move(cells)}};
      out.exit_code = report.positive() ? 0 : 1;
      return out;
    }
    if (j.is_array() || (j.is_object() && j.contains("mu"))) {
      auto [nu, mu] = load_pair(j);
      result = check_positive_incidence(nu, mu);
    } else {
      result = check_positive_plucker(matroid_from_json(j));
    }
  } else {
    throw InputError("unknown check kind '" + kind + "'");
  }
  out.body["result"] = check_to_json(result);
  out.exit_code = result.pass() ? 0 : 1;
  return out;
}

std::vector<int> parse_point(const std::string& text) {
  std::vector<int> x;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      x.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("malformed point coordinate '" + token + "'");
    }
  }
  return x;
}

Outcome run_compress(const Input& in, const std::string& point) {
  Outcome out;
  const auto flag = flag_from_json(in.json);
  if (!point.empty()) {
    const auto x = parse_point(point);
    const auto value = compress(flag, x);
    out.body["point"] = x;
    out.body["value"] = value ? rational_to_json(*value) : Json("inf");
    out.exit_code = value ? 0 : 1;
    return out;
  }
  const auto w = compress_on_vertices(flag);
  out.body["n"] = w.n;
  out.body["heights"] = heights_to_json(w)["heights"];
  return out;
}

Outcome run_subdivide(const Input& in, bool require_gp, bool require_bruhat) {
  Outcome out;
  const auto cells = subdivide(heights_from_json(in.json));
  Json list = Json::array();
  bool all_gp = true, all_bruhat = true;
  for (const auto& c : cells) {
    list.push_back(cell_to_json(c));
    all_gp = all_gp && c.generalized_permutahedron;
    all_bruhat = all_bruhat && c.bruhat.is_interval;
  }
  out.body["cell_count"] = cells.size();
  out.body["cells"] = std::move(list);
  out.body["all_generalized_permutahedra"] = all_gp;
  out.body["all_bruhat_intervals"] = all_bruhat;
  if ((require_gp && !all_gp) || (require_bruhat && !all_bruhat)) out.exit_code = 1;
  return out;
}

Outcome run_skeleton(const Input& in) {
  Outcome out;
  const auto report = check_two_skeleton(heights_from_json(in.json));
  out.body["report"] = skeleton_to_json(report);
  out.exit_code = report.permutahedral() ? 0 : 1;
  return out;
}

Outcome run_tropicalize(const Input& in, int rows) {
  Outcome out;
  const auto a = tmatrix_from_json(in.json);
  if (rows == 0) rows = static_cast<int>(std::min(a.size(), a.front().size()));
  const auto t = tropicalize_matrix(a, rows);
  out.body["rows"] = rows;
  out.body["tropicalization"] = tropicalization_to_json(t);
  bool all_positive = true;
  for (const auto& level : t.signs) {
    for (const auto& [set, sign] : level) all_positive = all_positive && sign > 0;
  }
  out.body["all_signs_positive"] = all_positive;
  return out;
}

Outcome run_fan(int n, bool census, bool homology, bool refinement, bool patterns, const std::string& dot_path,
                unsigned threads) {
  Outcome out;
  const Fan fan = enumerate_fan(n, threads);
  out.body["fan"] = fan_to_json(fan);
  if (census) out.body["census"] = census_to_json(f_vector_census(fan));
  if (homology) out.body["homology"] = homology_to_json(link_homology(fan));
  if (refinement) {
    const auto r = refinement_census(fan, threads);
    out.body["refinement"] = refinement_to_json(r);
    if (!r.discrepancies.empty()) out.exit_code = 1;
  }
  if (patterns) {
    Json list = Json::array();
    for (std::size_t i = 0; i < fan.maximal.size(); ++i) {
      list.push_back(pattern_signature(HeightFunction{fan.n, fan.barycenter(i)}).to_string());
    }
    out.body["patterns"] = std::move(list);
  }
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) throw InputError("cannot write '" + dot_path + "'");
    dot << link_graph_dot(fan);
  }
  return out;
}

Outcome run_decompose(const Input& in) {
  Outcome out;
  const auto w = heights_from_json(in.json);
  const auto d = decompose_height(w);
  if (!d.flag) {
    out.body["failure"] = d.failure;
    out.exit_code = 1;
    return out;
  }
  out.body["flag"] = flag_to_json(*d.flag);
  const bool round_trip = compress_on_vertices(*d.flag) == w;
  out.body["round_trip"] = round_trip;
  const auto check = check_flag(*d.flag);
  out.body["flag_check"] = check_to_json(check);
  out.exit_code = round_trip && check.pass() ? 0 : 1;
  return out;
}

Outcome run_lift(const Input& in) {
  Outcome out;
  const auto lift = lift_to_grassmannian(flag_from_json(in.json));
  out.body["alpha"] = rational_to_json(lift.alpha);
  out.body["convexity_defect"] = rational_to_json(lift.convexity_defect);
  out.body["lift"] = matroid_to_json(lift.mu);
  const auto plucker = check_plucker(lift.mu);
  out.body["plucker"] = check_to_json(plucker);
  out.body["positive_plucker"] = check_to_json(check_positive_plucker(lift.mu));
  out.exit_code = plucker.pass() ? 0 : 1;
  return out;
}

void emit(const Options& opt, const std::string& command, const std::string& digest, Outcome& outcome,
          double seconds) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["command"] = command;
  if (!digest.empty()) doc["input_digest"] = "fnv1a64:" + digest;
  for (auto& [key, value] : outcome.body.items()) doc[key] = std::move(value);
  doc["exit_code"] = outcome.exit_code;
  if (opt.timing) doc["timing_seconds"] = seconds;
  const std::string text = doc.dump(2) + "\n";
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw InputError("cannot write '" + opt.output + "'");
    out << text;
  }
}

void emit_error(const std::string& message) {
  Json doc{{"version", kFormatVersion}, {"error", message}};
  std::cerr << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Valuated flag matroids and permutahedral subdivisions"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--output", opt.output, "Write the report to this file instead of stdout");
  app.add_option("--threads", opt.threads, "Worker threads for data-parallel steps (0 = all cores)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json"}));
  app.add_flag("--timing", opt.timing, "Include wall-clock time in the report");

  std::string file;
  std::string kind;
  auto* check = app.add_subcommand("check", "Plücker, incidence, positivity or flag relations");
  check->add_option("kind", kind, "plucker | incidence | positive | flag")
      ->required()
      ->check(CLI::IsMember({"plucker", "incidence", "positive", "flag"}));
  check->add_option("input", file, "Input JSON")->required();

  std::string point;
  auto* compress_cmd = app.add_subcommand("compress", "Compression of a valuated flag matroid");
  compress_cmd->add_option("input", file, "Flag JSON")->required();
  compress_cmd->add_option("--point", point, "Evaluate at one lattice point, e.g. 2,2,2");

  bool require_gp = false, require_bruhat = false;
  auto* subdivide_cmd = app.add_subcommand("subdivide", "Regular subdivision of the permutahedron");
  subdivide_cmd->add_option("input", file, "Heights JSON")->required();
  subdivide_cmd->add_flag("--require-gp", require_gp, "Fail unless every cell is a generalized permutahedron");
  subdivide_cmd->add_flag("--require-bruhat", require_bruhat, "Fail unless every cell is a Bruhat interval polytope");

  auto* skeleton_cmd = app.add_subcommand("skeleton", "HXE, HXM, SQR and HXM+ on the 2-skeleton");
  skeleton_cmd->add_option("input", file, "Heights JSON")->required();

  int rows = 0;
  auto* trop_cmd = app.add_subcommand("tropicalize", "Tropicalize a matrix over Q[t, 1/t]");
  trop_cmd->add_option("input", file, "Matrix JSON")->required();
  trop_cmd->add_option("--rows", rows, "Number of leading rows (default: all)")->check(CLI::PositiveNumber);

  int fan_n = 0;
  bool census = false, homology = false, refinement = false, patterns = false;
  std::string dot_path;
  auto* fan_cmd = app.add_subcommand("fan", "Enumerate the fan of permutahedral height functions");
  fan_cmd->add_option("n", fan_n, "3 or 4")->required();
  fan_cmd->add_flag("--census", census, "f-vector and simplicial census");
  fan_cmd->add_flag("--homology", homology, "Rational homology of the link");
  fan_cmd->add_flag("--refinement", refinement, "Count refining secondary-fan cones");
  fan_cmd->add_flag("--patterns", patterns, "2-skeleton pattern of each maximal cone");
  fan_cmd->add_option("--dot", dot_path, "Write the link graph in GraphViz format");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split heights into a flag of valuated matroids");
  decompose_cmd->add_option("input", file, "Heights JSON")->required();

  auto* lift_cmd = app.add_subcommand("lift", "Lift a flag to a valuated matroid on U(n, 2n)");
  lift_cmd->add_option("input", file, "Flag JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome;
    std::string command;
    std::string digest;
    if (*check) {
      command = "check " + kind;
      auto in = load(file);
      digest = fnv1a_hex(in.bytes);
      outcome = run_check(kind, in);
    } else if (*compress_cmd) {
      command = "compress";
      auto in = load(file);
      digest = fnv1a_hex(in.bytes);
      outcome = run_compress(in, point);
    } else if (*subdivide_cmd) {
      command = "subdivide";
      auto in = load(file);
      digest = fnv1a_hex(in.bytes);
      outcome = run_subdivide(in, require_gp, require_bruhat);
    } else if (*skeleton_cmd) {
      command = "skeleton";
      auto in = load(file);
      digest = fnv1a_hex(in.bytes);
      outcome = run_skeleton(in);
    } else if (*trop_cmd) {
      command = "tropicalize";
      auto in = load(file);
      digest = fnv1a_hex(in.bytes);
      outcome = run_tropicalize(in, rows);
    } else if (*fan_cmd) {
      command = "fan";
      digest = fnv1a_hex("fan " + std::to_string(fan_n));
      outcome = run_fan(fan_n, census, homology, refinement, patterns, dot_path, opt.threads);
    } else if (*decompose_cmd) {
      command = "decompose";
      auto in = load(file);
      digest = fnv1a_hex(in.bytes);
      outcome = run_decompose(in);
    } else if (*lift_cmd) {
      command = "lift";
      auto in = load(file);
      digest = fnv1a_hex(in.bytes);
      outcome = run_lift(in);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(opt, command, digest, outcome, seconds);
    return outcome.exit_code;
  } catch (const InputError& e) {
    emit_error(e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(std::string("internal error: ") + e.what());
    return 3;
  }
}
