#include "permsub/fanenum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permsub/parallel.hpp"

namespace permsub {

std::string PatternSignature::to_string() const {
  std::ostringstream out;
  for (std::size_t h = 0; h < attaining.size(); ++h) {
    if (h) out << ' ';
    for (int t : attaining[h]) out << t;
    out << '/';
    if (split[h] < 0) {
      out << '-';
    } else {
      out << split[h];
    }
  }
  return out.str();
}

PatternSignature pattern_signature(const HeightFunction& w) {
  const auto report = check_two_skeleton(w);
  if (!report.permutahedral()) throw InputError("pattern_signature: heights violate HXE, HXM or SQR");
  PatternSignature sig;
  for (const auto& hx : report.hexagons) {
    sig.attaining.push_back(hx.attaining);
    if (hx.attaining.size() == 2) {
      sig.split.push_back(3 - hx.attaining[0] - hx.attaining[1]);
    } else {
      sig.split.push_back(-1);
    }
  }
  return sig;
}

QVector Fan::barycenter(std::size_t i) const {
  QVector sum(ambient, Rational(0));
  for (auto r : maximal.at(i)) {
    for (std::size_t c = 0; c < ambient; ++c) sum[c] += rays[r][c];
  }
  return sum;
}

namespace {

QVector unit_combination(std::size_t size, const std::vector<std::pair<std::size_t, int>>& terms) {
  QVector row(size, Rational(0));
  for (auto [index, coeff] : terms) row[index] += coeff;
  return row;
}

std::vector<std::size_t> face_indices(const TwoFace& face) {
  std::vector<std::size_t> out;
  for (const auto& v : face.vertices) out.push_back(permutation_index(v));
  return out;
}

QVector diagonal_row(std::size_t size, const std::vector<std::size_t>& hex, int t) {
  return unit_combination(size, {{hex[static_cast<std::size_t>(t)], 1}, {hex[static_cast<std::size_t>(t) + 3], 1}});
}

QVector difference(const QVector& a, const QVector& b) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

struct ChoiceSystem {
  QMatrix equalities;
  QMatrix inequalities;
};

ChoiceSystem choice_system(const QMatrix& base, const std::vector<std::vector<std::size_t>>& hexagons,
                           std::size_t ambient, std::size_t choice) {
  ChoiceSystem sys;
  sys.equalities = base;
  for (const auto& hex : hexagons) {
    const int excluded = static_cast<int>(choice % 3);
    choice /= 3;
    const int a = excluded == 0 ? 1 : 0;
    const int b = excluded == 2 ? 1 : 2;
    const QVector da = diagonal_row(ambient, hex, a);
    const QVector db = diagonal_row(ambient, hex, b);
    const QVector dx = diagonal_row(ambient, hex, excluded);
    sys.equalities.push_back(difference(da, db));
    sys.inequalities.push_back(difference(da, dx));
    sys.inequalities.push_back(difference(db, dx));
  }
  return sys;
}

std::size_t ray_rank(const QMatrix& rays, const std::vector<std::size_t>& subset, std::size_t ambient) {
  QMatrix m;
  for (auto r : subset) m.push_back(rays[r]);
  return rank(m, ambient);
}

// Faces of a cone as subsets of its (globally indexed) rays, via closure of
// tight inequality sets.
std::vector<std::vector<std::size_t>> cone_faces(const Cone& cone, const std::vector<std::size_t>& ray_ids,
                                                 const QMatrix& rays) {
  const std::size_t k = ray_ids.size();
  if (k > 20) throw std::logic_error("cone with too many rays for face enumeration");
  std::vector<std::vector<bool>> tight(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (const auto& row : cone.inequalities) tight[r].push_back(dot(row, rays[ray_ids[r]]) == 0);
  }
  const std::size_t m = cone.inequalities.size();
  std::vector<std::vector<std::size_t>> faces;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<bool> common(m, true);
    for (std::size_t r = 0; r < k; ++r) {
      if (!((mask >> r) & 1u)) continue;
      for (std::size_t i = 0; i < m; ++i) common[i] = common[i] && tight[r][i];
    }
    std::uint32_t closure = 0;
    for (std::size_t r = 0; r < k; ++r) {
      bool contains = true;
      for (std::size_t i = 0; i < m && contains; ++i) contains = !common[i] || tight[r][i];
      if (contains) closure |= 1u << r;
    }
    if (closure != mask) continue;
    std::vector<std::size_t> face;
    for (std::size_t r = 0; r < k; ++r) {
      if ((mask >> r) & 1u) face.push_back(ray_ids[r]);
    }
    std::sort(face.begin(), face.end());
    faces.push_back(std::move(face));
  }
  return faces;
}

std::size_t ray_index(const QMatrix& rays, const QVector& v) {
  auto it = std::lower_bound(rays.begin(), rays.end(), v);
  if (it == rays.end() || *it != v) return rays.size();
  return static_cast<std::size_t>(it - rays.begin());
}

}  // namespace

QMatrix skeleton_equalities(int n) {
  const std::size_t ambient = all_permutations(n).size();
  QMatrix rows;
  for (const auto& face : enumerate_two_faces(n)) {
    const auto v = face_indices(face);
    if (face.kind == TwoFaceKind::Hexagon) {
      rows.push_back(unit_combination(ambient, {{v[0], 1}, {v[2], 1}, {v[4], 1}, {v[1], -1}, {v[3], -1}, {v[5], -1}}));
    } else {
      rows.push_back(unit_combination(ambient, {{v[0], 1}, {v[2], 1}, {v[1], -1}, {v[3], -1}}));
    }
  }
  rows.emplace_back(ambient, Rational(1));
  return rows;
}

Fan enumerate_fan(int n, unsigned threads) {
  if (n < 3 || n > 4) throw InputError("enumerate_fan supports n = 3 and n = 4");
  Fan fan;
  fan.n = n;
  fan.ambient = all_permutations(n).size();
  const QMatrix base = skeleton_equalities(n);
  std::vector<std::vector<std::size_t>> hexagons;
  for (const auto& face : enumerate_two_faces(n)) {
    if (face.kind == TwoFaceKind::Hexagon) hexagons.push_back(face_indices(face));
  }
  std::size_t choices = 1;
  for (std::size_t h = 0; h < hexagons.size(); ++h) choices *= 3;
  fan.sign_choices = choices;

  // keys only, to keep memory flat; unique cones are rebuilt afterwards
  std::vector<std::optional<std::string>> keys(choices);
  parallel_for(choices, threads, [&](std::size_t c) {
    const auto sys = choice_system(base, hexagons, fan.ambient, c);
    Cone cone = cone_solve(sys.equalities, sys.inequalities, fan.ambient);
    if (!cone.trivial()) keys[c] = std::move(cone.key);
  });
  std::map<std::string, std::size_t> first_choice;
  for (std::size_t c = 0; c < choices; ++c) {
    if (keys[c]) first_choice.emplace(*keys[c], c);
  }
  std::vector<Cone> unique;
  for (const auto& [key, c] : first_choice) {
    const auto sys = choice_system(base, hexagons, fan.ambient, c);
    unique.push_back(cone_solve(sys.equalities, sys.inequalities, fan.ambient));
  }

  std::vector<bool> is_maximal(unique.size(), true);
  for (std::size_t a = 0; a < unique.size(); ++a) {
    for (std::size_t b = 0; b < unique.size() && is_maximal[a]; ++b) {
      if (a == b || unique[b].dimension < unique[a].dimension) continue;
      if (unique[a].lineality != unique[b].lineality) continue;
      const bool inside = std::all_of(unique[a].rays.begin(), unique[a].rays.end(),
                                      [&](const QVector& r) { return unique[b].contains(r); });
      if (inside) is_maximal[a] = false;
    }
  }
  std::vector<Cone> maximal;
  for (std::size_t a = 0; a < unique.size(); ++a) {
    if (is_maximal[a]) maximal.push_back(std::move(unique[a]));
  }
  if (maximal.empty()) throw std::logic_error("fan has no nontrivial cones");
  fan.lineality = maximal.front().lineality;
  fan.lineality_dim = maximal.front().lineality_dim;
  for (const auto& cone : maximal) {
    if (cone.lineality != fan.lineality) throw std::logic_error("maximal cones with different lineality spaces");
    fan.rays.insert(fan.rays.end(), cone.rays.begin(), cone.rays.end());
  }
  std::sort(fan.rays.begin(), fan.rays.end());
  fan.rays.erase(std::unique(fan.rays.begin(), fan.rays.end()), fan.rays.end());

  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> order;
  std::vector<std::set<std::vector<std::size_t>>> by_dim;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    std::vector<std::size_t> ids;
    for (const auto& r : maximal[i].rays) ids.push_back(ray_index(fan.rays, r));
    std::sort(ids.begin(), ids.end());
    for (auto& face : cone_faces(maximal[i], ids, fan.rays)) {
      const std::size_t dim = ray_rank(fan.rays, face, fan.ambient);
      if (by_dim.size() < dim) by_dim.resize(dim);
      by_dim[dim - 1].insert(std::move(face));
    }
    order.emplace_back(std::move(ids), i);
  }
  std::sort(order.begin(), order.end());
  for (auto& [ids, i] : order) {
    fan.maximal.push_back(ids);
    fan.maximal_cones.push_back(std::move(maximal[i]));
  }
  for (auto& s : by_dim) fan.cones.emplace_back(s.begin(), s.end());
  return fan;
}

FanCensus f_vector_census(const Fan& fan) {
  FanCensus census;
  for (const auto& level : fan.cones) census.f_vector.push_back(level.size());
  for (const auto& ids : fan.maximal) {
    if (census.maximal_by_ray_count.size() <= ids.size()) census.maximal_by_ray_count.resize(ids.size() + 1, 0);
    ++census.maximal_by_ray_count[ids.size()];
    if (ray_rank(fan.rays, ids, fan.ambient) == ids.size()) ++census.simplicial;
  }
  return census;
}

namespace {

bool coarsens(const std::vector<std::vector<std::size_t>>& coarse, const std::vector<std::vector<std::size_t>>& fine) {
  for (const auto& cell : fine) {
    const bool covered = std::any_of(coarse.begin(), coarse.end(), [&](const std::vector<std::size_t>& big) {
      return std::includes(big.begin(), big.end(), cell.begin(), cell.end());
    });
    if (!covered) return false;
  }
  return true;
}

}  // namespace

RefinementCensus refinement_census(const Fan& fan, unsigned threads) {
  const auto perms = all_permutations(fan.n);
  PointConfiguration config;
  config.dim = static_cast<std::size_t>(fan.n);
  for (const auto& p : perms) config.points.push_back(p.point());

  RefinementCensus census;
  census.cones.resize(fan.maximal.size());
  parallel_for(fan.maximal.size(), threads, [&](std::size_t i) {
    const auto& ids = fan.maximal[i];
    const auto& cone = fan.maximal_cones[i];
    ConeRefinement& out = census.cones[i];
    out.cone = i;
    out.ray_count = ids.size();

    std::vector<QVector> points;
    const std::size_t k = ids.size();
    if (k < 3) {
      points.push_back(fan.barycenter(i));
    } else {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          for (std::size_t c = b + 1; c < k; ++c) {
            if (a == b || a == c) continue;
            QVector p(fan.ambient, Rational(0));
            for (std::size_t x = 0; x < fan.ambient; ++x) {
              p[x] = fan.rays[ids[a]][x] / 2 + fan.rays[ids[b]][x] / 4 + fan.rays[ids[c]][x] / 4;
            }
            points.push_back(std::move(p));
          }
        }
      }
    }
    // LP relative-interior witness
    std::vector<AffineRow> eqs, strict, weak;
    for (const auto& row : cone.equalities) eqs.push_back({row, 0});
    for (const auto& row : cone.inequalities) {
      const bool implicit = std::all_of(ids.begin(), ids.end(), [&](std::size_t r) { return dot(row, fan.rays[r]) == 0; });
      (implicit ? weak : strict).push_back({row, 0});
    }
    auto lp = lp_feasible(eqs, strict, weak, fan.ambient);
    if (!lp.feasible) throw std::logic_error("maximal cone without relative interior");
    points.push_back(project_out(lp.witness, orthogonal_basis(fan.lineality)));

    std::optional<PatternSignature> pattern;
    std::vector<std::vector<std::vector<std::size_t>>> found;
    for (auto& p : points) {
      HeightFunction w{fan.n, p};
      ConeSample sample{p, lower_cells(config, p)};
      const auto report = check_two_skeleton(w);
      bool gp = report.permutahedral();
      for (const auto& cell : sample.cells) {
        std::vector<Permutation> vs;
        for (auto l : cell) vs.push_back(perms[l]);
        gp = gp && is_generalized_permutahedron(vs);
      }
      out.samples_permutahedral = out.samples_permutahedral && gp;
      if (report.permutahedral()) {
        auto sig = pattern_signature(w);
        if (!pattern) {
          pattern = sig;
        } else if (*pattern != sig) {
          out.patterns_equal = false;
        }
      }
      if (std::find(found.begin(), found.end(), sample.cells) == found.end()) found.push_back(sample.cells);
      out.samples.push_back(std::move(sample));
    }
    for (std::size_t a = 0; a < found.size(); ++a) {
      bool coarsening = false;
      for (std::size_t b = 0; b < found.size() && !coarsening; ++b) {
        coarsening = a != b && coarsens(found[a], found[b]);
      }
      if (!coarsening) out.subdivisions.push_back(found[a]);
    }
    std::sort(out.subdivisions.begin(), out.subdivisions.end());
  });

  for (const auto& c : census.cones) {
    census.total += c.subdivisions.size();
    const std::size_t dim = ray_rank(fan.rays, fan.maximal[c.cone], fan.ambient);
    const std::size_t expected = c.ray_count == dim ? 1 : (c.ray_count == 4 && dim == 3 ? 2 : 0);
    std::ostringstream msg;
    if (expected == 0) {
      msg << "cone " << c.cone << ": no expected refinement count for " << c.ray_count << " rays";
    } else if (c.subdivisions.size() != expected) {
      msg << "cone " << c.cone << ": " << c.subdivisions.size() << " subdivisions, expected " << expected;
    } else if (!c.patterns_equal) {
      msg << "cone " << c.cone << ": interior samples induce different 2-skeleton patterns";
    } else if (!c.samples_permutahedral) {
      msg << "cone " << c.cone << ": an interior sample is not permutahedral";
    }
    if (!msg.str().empty()) census.discrepancies.push_back(msg.str());
  }
  return census;
}

Homology rational_homology(const PolygonComplex& complex) {
  std::map<std::array<std::size_t, 2>, std::size_t> edge_of;
  for (std::size_t e = 0; e < complex.edges.size(); ++e) {
    auto [a, b] = complex.edges[e];
    if (a >= complex.vertices || b >= complex.vertices || a == b) throw InputError("edge with invalid endpoints");
    edge_of[{std::min(a, b), std::max(a, b)}] = e;
  }
  const std::size_t v = complex.vertices, e = complex.edges.size(), f = complex.polygons.size();
  QMatrix d1(v, QVector(e, Rational(0)));
  for (std::size_t j = 0; j < e; ++j) {
    d1[complex.edges[j][0]][j] -= 1;
    d1[complex.edges[j][1]][j] += 1;
  }
  QMatrix d2(e, QVector(f, Rational(0)));
  for (std::size_t p = 0; p < f; ++p) {
    const auto& walk = complex.polygons[p];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const std::size_t a = walk[i], b = walk[(i + 1) % walk.size()];
      auto it = edge_of.find({std::min(a, b), std::max(a, b)});
      if (it == edge_of.end()) throw InputError("polygon side is not an edge of the complex");
      d2[it->second][p] += complex.edges[it->second][0] == a ? 1 : -1;
    }
  }
  const std::size_t r1 = e == 0 ? 0 : rank(d1, e);
  const std::size_t r2 = f == 0 ? 0 : rank(d2, f);
  Homology h;
  h.betti = {v - r1, e - r1 - r2, f - r2};
  h.euler = static_cast<long>(v) - static_cast<long>(e) + static_cast<long>(f);
  return h;
}

PolygonComplex link_complex(const Fan& fan) {
  if (fan.cones.size() != 3) throw InputError("link complex needs a fan of dimension 3 modulo lineality");
  for (const auto& ids : fan.maximal) {
    if (ray_rank(fan.rays, ids, fan.ambient) != 3) throw InputError("fan is not pure");
  }
  PolygonComplex complex;
  complex.vertices = fan.rays.size();
  for (const auto& edge : fan.cones[1]) {
    if (edge.size() != 2) throw InputError("two-dimensional cone without exactly two rays");
    complex.edges.push_back({edge[0], edge[1]});
  }
  for (std::size_t i = 0; i < fan.maximal.size(); ++i) {
    std::map<std::size_t, std::vector<std::size_t>> nbr;
    for (const auto& face : cone_faces(fan.maximal_cones[i], fan.maximal[i], fan.rays)) {
      if (face.size() != 2 || ray_rank(fan.rays, face, fan.ambient) != 2) continue;
      nbr[face[0]].push_back(face[1]);
      nbr[face[1]].push_back(face[0]);
    }
    std::vector<std::size_t> walk{fan.maximal[i].front()};
    for (const auto& [r, adj] : nbr) {
      if (adj.size() != 2) throw InputError("maximal cone boundary is not a cycle");
    }
    std::size_t prev = walk[0];
    std::size_t cur = std::min(nbr[walk[0]][0], nbr[walk[0]][1]);
    while (cur != walk[0]) {
      walk.push_back(cur);
      const auto& adj = nbr[cur];
      const std::size_t next = adj[0] == prev ? adj[1] : adj[0];
      prev = cur;
      cur = next;
      if (walk.size() > fan.maximal[i].size()) throw InputError("maximal cone boundary is not a cycle");
    }
    if (walk.size() != fan.maximal[i].size()) throw InputError("maximal cone boundary misses rays");
    complex.polygons.push_back(std::move(walk));
  }
  return complex;
}

Homology link_homology(const Fan& fan) { return rational_homology(link_complex(fan)); }

std::string link_graph_dot(const Fan& fan) {
  std::ostringstream out;
  out << "graph link {\n";
  for (std::size_t r = 0; r < fan.rays.size(); ++r) out << "  r" << r << ";\n";
  if (fan.cones.size() >= 2) {
    for (const auto& edge : fan.cones[1]) out << "  r" << edge[0] << " -- r" << edge[1] << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<std::vector<std::size_t>> maximal_cone_orbits(const Fan& fan) {
  const auto gens = symmetry_generators(fan.n);
  std::vector<std::size_t> parent(fan.maximal.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    std::vector<std::size_t> ray_image(fan.rays.size());
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
      QVector image(fan.ambient);
      for (std::size_t i = 0; i < fan.ambient; ++i) image[g[i]] = fan.rays[r][i];
      ray_image[r] = ray_index(fan.rays, image);
      if (ray_image[r] == fan.rays.size()) throw std::logic_error("symmetry maps a ray outside the fan");
    }
    for (std::size_t c = 0; c < fan.maximal.size(); ++c) {
      std::vector<std::size_t> image;
      for (auto r : fan.maximal[c]) image.push_back(ray_image[r]);
      std::sort(image.begin(), image.end());
      auto it = std::lower_bound(fan.maximal.begin(), fan.maximal.end(), image);
      if (it == fan.maximal.end() || *it != image) throw std::logic_error("symmetry maps a maximal cone outside the fan");
      parent[find(c)] = find(static_cast<std::size_t>(it - fan.maximal.begin()));
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < fan.maximal.size(); ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<std::size_t>> orbits;
  for (auto& [root, members] : groups) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

}  // namespace permsub
