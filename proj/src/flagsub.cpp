#include "permsub/flagsub.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "permsub/exactgeom.hpp"

namespace permsub {

void validate_flag_shape(const ValuatedFlagMatroid& flag) {
  if (flag.ranks.empty()) throw InputError("flag matroid has no constituents");
  const int n = flag.n();
  if (static_cast<int>(flag.ranks.size()) != n) {
    throw InputError("flag matroid on [" + std::to_string(n) + "] needs " + std::to_string(n) + " constituents");
  }
  for (int d = 1; d <= n; ++d) {
    const auto& mu = flag.at(d);
    if (mu.n() != n || mu.rank() != d) {
      throw InputError("constituent " + std::to_string(d) + " must have rank " + std::to_string(d) + " on [" +
                       std::to_string(n) + "]");
    }
  }
}

CheckResult check_flag(const ValuatedFlagMatroid& flag) {
  validate_flag_shape(flag);
  const int n = flag.n();
  CheckResult total;
  auto absorb = [&](CheckResult r, const std::string& where) {
    total.relations_checked += r.relations_checked;
    if (!r.pass() && total.pass()) {
      total.violation = std::move(r.violation);
      total.violation->detail = where + ": " + total.violation->detail;
    }
  };
  for (int d = 1; d <= n && total.pass(); ++d) {
    absorb(check_plucker(flag.at(d)), "rank " + std::to_string(d));
  }
  for (int d = 1; d < n && total.pass(); ++d) {
    absorb(check_incidence(flag.at(d), flag.at(d + 1)), "ranks " + std::to_string(d) + "," + std::to_string(d + 1));
  }
  for (int d = 1; d <= n && total.pass(); ++d) {
    for (int e = d + 2; e <= n && total.pass(); ++e) {
      absorb(check_quotient(flag.at(d), flag.at(e)), "ranks " + std::to_string(d) + "," + std::to_string(e));
    }
  }
  return total;
}

HeightFunction HeightFunction::zero(int n) {
  HeightFunction w;
  w.n = n;
  w.values.assign(all_permutations(n).size(), Rational(0));
  return w;
}

bool is_permutahedron_lattice_point(const std::vector<int>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> sorted = x;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  int sum = 0, bound = 0;
  for (int k = 0; k < n; ++k) {
    sum += sorted[k];
    bound += n - k;
    if (sum > bound) return false;
  }
  return n > 0 && sum == bound && sorted.back() >= 1;
}

namespace {

struct DecompositionValue {
  std::optional<Rational> best;
  std::size_t ways = 0;  // decompositions attaining best
};

class CompressionSolver {
 public:
  explicit CompressionSolver(const ValuatedFlagMatroid& flag) : flag_(flag), memo_(flag.n() + 1) {}

  // Y_level, Y_level-1, ..., Y_1 must cover the remaining multiplicities.
  DecompositionValue solve(int level, const std::vector<int>& remaining) {
    if (level == 0) return {Rational(0), 1};
    const std::uint64_t key = encode(remaining);
    auto& memo = memo_[level];
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int n = flag_.n();
    std::uint32_t forced = 0, allowed = 0;
    for (int p = 0; p < n; ++p) {
      if (remaining[p] > level) return memo[key] = {};
      if (remaining[p] == level) forced |= 1u << p;
      if (remaining[p] > 0) allowed |= 1u << p;
    }
    DecompositionValue out;
    const std::uint32_t free = allowed & ~forced;
    // enumerate Y ⊇ forced inside allowed with |Y| = level
    for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
      const std::uint32_t y = forced | extra;
      if (std::popcount(y) == level) {
        const auto& v = flag_.at(level).value(SubsetMask(y, n));
        if (v) {
          std::vector<int> next = remaining;
          for (int p = 0; p < n; ++p) {
            if ((y >> p) & 1u) --next[p];
          }
          auto sub = solve(level - 1, next);
          if (sub.best) {
            Rational total = *sub.best + *v;
            if (!out.best || total < *out.best) {
              out.best = total;
              out.ways = sub.ways;
            } else if (total == *out.best) {
              out.ways += sub.ways;
            }
          }
        }
      }
      if (extra == 0) break;
    }
    return memo[key] = out;
  }

 private:
  static std::uint64_t encode(const std::vector<int>& r) {
    std::uint64_t key = 0;
    for (int v : r) key = (key << 4) | static_cast<std::uint64_t>(v);
    return key;
  }

  const ValuatedFlagMatroid& flag_;
  std::vector<std::unordered_map<std::uint64_t, DecompositionValue>> memo_;
};

DecompositionValue solve_compression(const ValuatedFlagMatroid& flag, const std::vector<int>& x) {
  validate_flag_shape(flag);
  if (static_cast<int>(x.size()) != flag.n()) throw InputError("compress: point has the wrong length");
  if (!is_permutahedron_lattice_point(x)) throw InputError("compress: point is not a lattice point of the permutahedron");
  CompressionSolver solver(flag);
  return solver.solve(flag.n(), x);
}

Rational sum_over(const std::vector<Permutation>& vs, const HeightFunction& w, std::initializer_list<int> positions) {
  Rational s = 0;
  for (int p : positions) s += w.at(vs[static_cast<std::size_t>(p)]);
  return s;
}

std::string face_name(const TwoFace& face) {
  std::string out = face.kind == TwoFaceKind::Hexagon ? "hexagon" : "square";
  out += " (";
  for (std::size_t i = 0; i < face.vertices.size(); ++i) {
    if (i) out += ",";
    out += face.vertices[i].to_string();
  }
  return out + ")";
}

}  // namespace

std::optional<Rational> compress(const ValuatedFlagMatroid& flag, const std::vector<int>& x) {
  return solve_compression(flag, x).best;
}

std::size_t count_minimal_decompositions(const ValuatedFlagMatroid& flag, const std::vector<int>& x) {
  return solve_compression(flag, x).ways;
}

HeightFunction compress_on_vertices(const ValuatedFlagMatroid& flag) {
  validate_flag_shape(flag);
  const int n = flag.n();
  HeightFunction w;
  w.n = n;
  for (const auto& p : all_permutations(n)) {
    const auto chain = vertex_to_flag(p);
    Rational total = 0;
    for (int d = 1; d <= n; ++d) {
      const auto& v = flag.at(d).value(chain.constituents[static_cast<std::size_t>(d - 1)]);
      if (!v) throw InputError("compression is infinite at vertex " + p.to_string());
      total += *v;
    }
    w.values.push_back(std::move(total));
  }
  return w;
}

bool is_generalized_permutahedron(const std::vector<Permutation>& vertices) {
  if (vertices.empty()) throw InputError("empty vertex set");
  PointConfiguration config;
  config.dim = static_cast<std::size_t>(vertices.front().n());
  for (const auto& v : vertices) config.points.push_back(v.point());
  const Hull h = hull(config);
  for (auto [a, b] : h.edges) {
    int plus = 0, minus = 0;
    Rational magnitude = 0;
    for (std::size_t c = 0; c < config.dim; ++c) {
      const Rational diff = config.points[a][c] - config.points[b][c];
      if (diff == 0) continue;
      if (diff > 0) {
        ++plus;
      } else {
        ++minus;
      }
      if (magnitude == 0) {
        magnitude = abs(diff);
      } else if (abs(diff) != magnitude) {
        return false;
      }
    }
    if (plus != 1 || minus != 1) return false;
  }
  return true;
}

BruhatCertificate is_bruhat_interval_polytope(const std::vector<Permutation>& vertices) {
  if (vertices.empty()) throw InputError("empty vertex set");
  const int n = vertices.front().n();
  std::vector<Permutation> set = vertices;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<Permutation> minima, maxima;
  for (const auto& a : set) {
    bool is_min = true, is_max = true;
    for (const auto& b : set) {
      if (a == b) continue;
      if (bruhat_leq(b, a)) is_min = false;
      if (bruhat_leq(a, b)) is_max = false;
    }
    if (is_min) minima.push_back(a);
    if (is_max) maxima.push_back(a);
  }
  BruhatCertificate cert;
  if (minima.size() != 1 || maxima.size() != 1) return cert;
  std::vector<Permutation> interval;
  for (const auto& p : all_permutations(n)) {
    if (bruhat_leq(minima[0], p) && bruhat_leq(p, maxima[0])) interval.push_back(p);
  }
  if (interval != set) return cert;
  cert.is_interval = true;
  cert.endpoints = std::make_pair(minima[0], maxima[0]);
  return cert;
}

std::vector<Cell> subdivide(const HeightFunction& w) {
  const auto perms = all_permutations(w.n);
  if (w.values.size() != perms.size()) throw InputError("height function must assign every vertex");
  PointConfiguration config;
  config.dim = static_cast<std::size_t>(w.n);
  for (const auto& p : perms) config.points.push_back(p.point());
  std::vector<Cell> cells;
  for (const auto& labels : lower_cells(config, w.values)) {
    Cell cell;
    for (auto i : labels) cell.vertices.push_back(perms[i]);
    cell.generalized_permutahedron = is_generalized_permutahedron(cell.vertices);
    cell.bruhat = is_bruhat_interval_polytope(cell.vertices);
    cells.push_back(std::move(cell));
  }
  return cells;
}

SkeletonReport check_two_skeleton(const HeightFunction& w) {
  if (w.values.size() != all_permutations(w.n).size()) throw InputError("height function must assign every vertex");
  SkeletonReport report;
  report.n = w.n;
  if (w.n < 3) return report;
  report.faces = enumerate_two_faces(w.n);
  for (std::size_t f = 0; f < report.faces.size(); ++f) {
    const auto& vs = report.faces[f].vertices;
    if (report.faces[f].kind == TwoFaceKind::Square) {
      SquareReport sq;
      sq.face = f;
      sq.sums = {sum_over(vs, w, {0, 2}), sum_over(vs, w, {1, 3})};
      sq.sqr = sq.sums[0] == sq.sums[1];
      report.sqr = report.sqr && sq.sqr;
      report.squares.push_back(std::move(sq));
      continue;
    }
    HexagonReport hx;
    hx.face = f;
    hx.alternating = {sum_over(vs, w, {0, 2, 4}), sum_over(vs, w, {1, 3, 5})};
    hx.diagonals = {sum_over(vs, w, {0, 3}), sum_over(vs, w, {1, 4}), sum_over(vs, w, {2, 5})};
    const Rational top = std::max({hx.diagonals[0], hx.diagonals[1], hx.diagonals[2]});
    for (int t = 0; t < 3; ++t) {
      if (hx.diagonals[t] == top) hx.attaining.push_back(t);
    }
    int minimal = -1;
    for (int p = 0; p < 6; ++p) {
      bool below_all = true;
      for (int q = 0; q < 6 && below_all; ++q) below_all = bruhat_leq(vs[p], vs[q]);
      if (below_all) {
        if (minimal != -1) throw std::logic_error("hexagon with two Bruhat-minimal vertices");
        minimal = p;
      }
    }
    if (minimal == -1) throw std::logic_error("hexagon without a Bruhat-minimal vertex");
    hx.minimal_vertex = minimal;
    hx.hxe = hx.alternating[0] == hx.alternating[1];
    hx.hxm = hx.attaining.size() >= 2;
    hx.hxm_plus = hx.hxm && hx.diagonals[minimal % 3] == top;
    report.hxe = report.hxe && hx.hxe;
    report.hxm = report.hxm && hx.hxm;
    report.hxm_plus = report.hxm_plus && hx.hxm_plus;
    report.hexagons.push_back(std::move(hx));
  }
  return report;
}

PotentialResult reconstruct_potential(const Graph& graph, const std::vector<Rational>& edge_values,
                                      std::size_t root, const Rational& f0) {
  if (edge_values.size() != graph.edges.size()) throw InputError("one value per edge required");
  if (root >= graph.vertex_count) throw InputError("root out of range");
  auto oriented = [&](std::size_t a, std::size_t b) -> Rational {
    const auto e = graph.edge_index(a, b);
    if (e == Graph::npos) throw InputError("face walk leaves the edge graph");
    return graph.edges[e].first == a ? edge_values[e] : Rational(-edge_values[e]);
  };
  PotentialResult result;
  for (std::size_t f = 0; f < graph.faces.size(); ++f) {
    const auto& walk = graph.faces[f];
    Rational cycle = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) cycle += oriented(walk[i], walk[(i + 1) % walk.size()]);
    if (cycle != 0) {
      result.failing_face = f;
      return result;
    }
  }
  std::vector<std::optional<Rational>> f(graph.vertex_count);
  std::vector<bool> tree_edge(graph.edges.size(), false);
  f[root] = f0;
  std::queue<std::size_t> queue;
  queue.push(root);
  while (!queue.empty()) {
    const auto a = queue.front();
    queue.pop();
    for (auto b : graph.adjacency[a]) {
      if (f[b]) continue;
      f[b] = *f[a] - oriented(a, b);
      tree_edge[graph.edge_index(a, b)] = true;
      queue.push(b);
    }
  }
  for (std::size_t v = 0; v < graph.vertex_count; ++v) {
    if (!f[v]) throw InputError("potential graph is disconnected");
    result.values.push_back(*f[v]);
  }
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (tree_edge[e]) continue;
    const auto [a, b] = graph.edges[e];
    if (result.values[a] - result.values[b] != edge_values[e]) {
      throw std::logic_error("potential mismatch on a non-tree edge despite zero face sums");
    }
  }
  return result;
}

Decomposition decompose_height(const HeightFunction& w) {
  const int n = w.n;
  const auto report = check_two_skeleton(w);
  Decomposition out;
  for (const auto& sq : report.squares) {
    if (!sq.sqr) {
      out.failure = "SQR fails on " + face_name(report.faces[sq.face]);
      return out;
    }
  }
  for (const auto& hx : report.hexagons) {
    if (!hx.hxe) {
      out.failure = "HXE fails on " + face_name(report.faces[hx.face]);
      return out;
    }
  }

  const auto pi = permutahedron_graph(n);
  // h_d(A, B) = w(a) - w(b) for any Π_n edge a -> b tagged (A, B)
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> transfer;
  for (std::size_t e = 0; e < pi.edges.size(); ++e) {
    const auto [a, b] = pi.edges[e];
    const auto [sa, sb] = pi.edge_tags[e];
    const Rational value = w.values[a] - w.values[b];
    auto [it, inserted] = transfer.emplace(std::make_pair(sa.bits(), sb.bits()), value);
    if (!inserted && it->second != value) throw std::logic_error("parallel edges disagree although SQR holds");
    transfer.emplace(std::make_pair(sb.bits(), sa.bits()), -value);
  }

  const Permutation u = Permutation::identity(n);
  const auto u_flag = vertex_to_flag(u);
  ValuatedFlagMatroid flag;
  for (int d = 1; d < n; ++d) {
    const auto delta = hypersimplex_graph(d, n);
    std::vector<Rational> values;
    for (auto [a, b] : delta.edges) {
      values.push_back(transfer.at({delta.vertices[a].bits(), delta.vertices[b].bits()}));
    }
    const auto root = delta.index_of(u_flag.constituents[static_cast<std::size_t>(d - 1)]);
    auto potential = reconstruct_potential(delta, values, root, Rational(0));
    if (!potential.ok()) throw std::logic_error("hypersimplex triangle with nonzero sum although HXE holds");
    ValuatedMatroid g(n, d);
    for (std::size_t v = 0; v < delta.vertices.size(); ++v) g.set(delta.vertices[v], potential.values[v]);
    flag.ranks.push_back(std::move(g));
  }
  ValuatedMatroid top(n, n);
  top.set(SubsetMask::full(n), w.at(u));
  flag.ranks.push_back(std::move(top));
  out.flag = std::move(flag);
  return out;
}

GrassmannianLift lift_to_grassmannian(const ValuatedFlagMatroid& flag) {
  validate_flag_shape(flag);
  const int n = flag.n();
  if (2 * n > kMaxGround) throw InputError("lift needs 2n <= " + std::to_string(kMaxGround));
  for (const auto& mu : flag.ranks) {
    if (!mu.has_uniform_support()) throw InputError("lift needs uniform supports");
  }
  auto w = [&](SubsetMask s) -> Rational {
    if (s.size() == 0) return Rational(0);
    return *flag.at(s.size()).value(s);
  };
  GrassmannianLift lift;
  bool any = false;
  for (int m = 0; m + 2 <= n; ++m) {
    for (auto t : k_subsets(n, m)) {
      const auto rest = SubsetMask::full(n).minus(t).elements();
      for (std::size_t a = 0; a < rest.size(); ++a) {
        for (std::size_t b = a + 1; b < rest.size(); ++b) {
          const int i = rest[a], j = rest[b];
          Rational defect = w(t.with(i)) + w(t.with(j)) - w(t.with(i).with(j)) - w(t);
          if (!any || defect > lift.convexity_defect) lift.convexity_defect = defect;
          any = true;
        }
      }
    }
  }
  lift.alpha = 0;
  if (any) {
    const Integer half = ceil(Rational(lift.convexity_defect / 2));
    if (half > 0) lift.alpha = Rational(half);
  }
  lift.mu = ValuatedMatroid(2 * n, n);
  const SubsetMask low = SubsetMask::full(n);
  for (auto b : k_subsets(2 * n, n)) {
    SubsetMask part(b.bits() & low.bits(), n);
    const int d = part.size();
    lift.mu.set(b, w(part) + lift.alpha * d * d);
  }
  return lift;
}

PositivityReport check_positive_flag(const HeightFunction& w) {
  PositivityReport report;
  report.skeleton = check_two_skeleton(w);
  report.cells = subdivide(w);
  report.skeleton_positive = report.skeleton.positive();
  report.cells_bruhat = std::all_of(report.cells.begin(), report.cells.end(),
                                    [](const Cell& c) { return c.bruhat.is_interval; });
  if (report.skeleton_positive != report.cells_bruhat) {
    throw std::logic_error("positivity criteria disagree: skeleton says " +
                           std::string(report.skeleton_positive ? "positive" : "not positive") + ", cells say " +
                           (report.cells_bruhat ? "all Bruhat intervals" : "not all Bruhat intervals"));
  }
  return report;
}

ValuatedFlagMatroid corank_flag(const std::vector<Permutation>& cell) {
  if (cell.empty()) throw InputError("empty cell");
  const int n = cell.front().n();
  ValuatedFlagMatroid flag;
  for (int d = 1; d <= n; ++d) {
    std::vector<SubsetMask> bases;
    for (const auto& p : cell) bases.push_back(vertex_to_flag(p).constituents[static_cast<std::size_t>(d - 1)]);
    flag.ranks.push_back(corank_valuation(Matroid::from_bases(n, d, bases)));
  }
  return flag;
}

}  // namespace permsub
