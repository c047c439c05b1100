#include "permsub/permcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace permsub {

namespace {

void require_perm_n(int n, int lo) {
  if (n < lo || n > kMaxPermN) {
    throw InputError("n = " + std::to_string(n) + " outside supported range [" + std::to_string(lo) + ", " +
                     std::to_string(kMaxPermN) + "]");
  }
}

}  // namespace

Permutation::Permutation(const std::vector<int>& images) : n_(static_cast<int>(images.size())) {
  require_perm_n(n_, 1);
  std::uint32_t seen = 0;
  for (int p = 0; p < n_; ++p) {
    int v = images[p];
    if (v < 1 || v > n_ || (seen & (1u << v))) throw InputError("not a permutation of [" + std::to_string(n_) + "]");
    seen |= 1u << v;
    images_[p] = static_cast<std::uint8_t>(v);
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(images);
}

Permutation Permutation::longest(int n) {
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[p] = n - p;
  return Permutation(images);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    int value = 0;
    bool any = false;
    for (char c : text) {
      if (c == ',') {
        if (!any) throw InputError("malformed permutation '" + std::string(text) + "'");
        images.push_back(value);
        value = 0;
        any = false;
      } else if (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        any = true;
      } else {
        throw InputError("malformed permutation '" + std::string(text) + "'");
      }
    }
    if (!any) throw InputError("malformed permutation '" + std::string(text) + "'");
    images.push_back(value);
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InputError("malformed permutation '" + std::string(text) + "'");
      images.push_back(c - '0');
    }
  }
  return Permutation(images);
}

QVector Permutation::point() const {
  QVector out;
  for (int p = 0; p < n_; ++p) out.emplace_back(images_[p]);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(n_);
  for (int p = 0; p < n_; ++p) inv[images_[p] - 1] = p + 1;
  return Permutation(inv);
}

int Permutation::length() const {
  int count = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) count += images_[a] > images_[b];
  }
  return count;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int p = 0; p < n_; ++p) {
    if (n_ > 9 && p > 0) out += ',';
    out += std::to_string(images_[p]);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  require_perm_n(n, 1);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t permutation_index(const Permutation& p) {
  const int n = p.n();
  std::size_t index = 0;
  std::size_t factorial = 1;
  for (int k = 2; k < n; ++k) factorial *= k;
  for (int a = 1; a <= n; ++a) {
    std::size_t smaller_later = 0;
    for (int b = a + 1; b <= n; ++b) smaller_later += p(b) < p(a);
    index += smaller_later * factorial;
    if (n - a > 0) factorial /= std::max(1, n - a);
  }
  return index;
}

bool bruhat_leq(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw InputError("bruhat_leq: permutations of different size");
  const int n = a.n();
  for (int k = 1; k <= n; ++k) {
    int count_a = 0;
    int count_b = 0;
    for (int i = 1; i <= n; ++i) {
      count_a += a(i) >= k;
      count_b += b(i) >= k;
      if (count_a > count_b) return false;
    }
  }
  return true;
}

bool FaceFlag::is_full() const {
  const int size = static_cast<int>(constituents.size());
  if (size == 0 || size != n()) return false;
  for (int i = 0; i < size; ++i) {
    if (constituents[i].size() != i + 1) return false;
  }
  return true;
}

FaceFlag vertex_to_flag(const Permutation& v) {
  const int n = v.n();
  FaceFlag flag;
  SubsetMask current(0, n);
  for (int d = 1; d <= n; ++d) {
    // the position holding value n - d + 1 joins F_d
    for (int p = 1; p <= n; ++p) {
      if (v(p) == n - d + 1) current = current.with(p);
    }
    flag.constituents.push_back(current);
  }
  return flag;
}

Permutation flag_to_vertex(const FaceFlag& flag) {
  if (!flag.is_full()) throw InputError("flag_to_vertex: flag is not full");
  const int n = flag.n();
  std::vector<int> images(n, 0);
  SubsetMask previous(0, n);
  for (int d = 1; d <= n; ++d) {
    const SubsetMask& cur = flag.constituents[d - 1];
    if (!previous.subset_of(cur)) throw InputError("flag_to_vertex: constituents not nested");
    SubsetMask added = cur.minus(previous);
    images[added.elements().front() - 1] = n - d + 1;
    previous = cur;
  }
  return Permutation(images);
}

std::pair<SubsetMask, SubsetMask> TwoFace::hexagon_gap() const {
  SubsetMask previous(0, chain.front().n());
  for (const auto& c : chain) {
    if (c.minus(previous).size() == 3) return {previous, c};
    previous = c;
  }
  throw std::logic_error("hexagon_gap called on a square");
}

namespace {

// Enumerates ordered set partitions of `remaining` whose blocks realise the
// requested multiset of big-block sizes, emitting the chain of unions.
void collect_chains(SubsetMask done, int n, int size3, int size2, std::vector<SubsetMask>& chain,
                    std::vector<std::vector<SubsetMask>>& out) {
  SubsetMask rest = SubsetMask::full(n).minus(done);
  if (rest.empty()) {
    if (size3 == 0 && size2 == 0) out.push_back(chain);
    return;
  }
  const auto elems = rest.elements();
  const int m = static_cast<int>(elems.size());
  for (std::uint32_t pick = 1; pick < (1u << m); ++pick) {
    int block = std::popcount(pick);
    int next3 = size3;
    int next2 = size2;
    if (block == 3 && size3 > 0) {
      --next3;
    } else if (block == 2 && size2 > 0) {
      --next2;
    } else if (block != 1) {
      continue;
    }
    SubsetMask b(0, n);
    for (int t = 0; t < m; ++t) {
      if (pick & (1u << t)) b = b.with(elems[t]);
    }
    chain.push_back(done | b);
    collect_chains(done | b, n, next3, next2, chain, out);
    chain.pop_back();
  }
}

// All full flags refining a chain, as vertices.
std::vector<Permutation> refining_vertices(const std::vector<SubsetMask>& chain, int n) {
  std::vector<std::vector<SubsetMask>> partial{{}};
  SubsetMask previous(0, n);
  for (const auto& c : chain) {
    auto gap = c.minus(previous).elements();
    std::sort(gap.begin(), gap.end());
    std::vector<std::vector<SubsetMask>> next;
    do {
      for (const auto& base : partial) {
        auto extended = base;
        SubsetMask cur = previous;
        for (int e : gap) {
          cur = cur.with(e);
          extended.push_back(cur);
        }
        next.push_back(std::move(extended));
      }
    } while (std::next_permutation(gap.begin(), gap.end()));
    partial = std::move(next);
    previous = c;
  }
  std::vector<Permutation> out;
  for (auto& constituents : partial) out.push_back(flag_to_vertex(FaceFlag{constituents}));
  std::sort(out.begin(), out.end());
  return out;
}

int flag_difference(const FaceFlag& a, const FaceFlag& b, int& level) {
  int diff = 0;
  for (std::size_t d = 0; d < a.constituents.size(); ++d) {
    if (a.constituents[d] != b.constituents[d]) {
      ++diff;
      level = static_cast<int>(d);
    }
  }
  return diff;
}

bool adjacent_vertices(const Permutation& a, const Permutation& b) {
  int level = 0;
  return flag_difference(vertex_to_flag(a), vertex_to_flag(b), level) == 1;
}

std::vector<Permutation> cyclic_order(const std::vector<Permutation>& sorted_vertices) {
  const std::size_t k = sorted_vertices.size();
  std::vector<Permutation> cycle{sorted_vertices.front()};
  std::vector<bool> used(k, false);
  used[0] = true;
  for (std::size_t step = 1; step < k; ++step) {
    // sorted order makes the first unused neighbour the smaller one
    for (std::size_t t = 0; t < k; ++t) {
      if (!used[t] && adjacent_vertices(cycle.back(), sorted_vertices[t])) {
        used[t] = true;
        cycle.push_back(sorted_vertices[t]);
        break;
      }
    }
  }
  if (cycle.size() != k || !adjacent_vertices(cycle.back(), cycle.front())) {
    throw std::logic_error("2-face vertices do not form a cycle");
  }
  return cycle;
}

}  // namespace

std::vector<TwoFace> enumerate_two_faces(int n) {
  if (n < 3) throw InputError("enumerate_two_faces needs n >= 3");
  require_perm_n(n, 3);
  std::vector<std::vector<SubsetMask>> hex_chains;
  std::vector<std::vector<SubsetMask>> sq_chains;
  std::vector<SubsetMask> scratch;
  collect_chains(SubsetMask(0, n), n, 1, 0, scratch, hex_chains);
  collect_chains(SubsetMask(0, n), n, 0, 2, scratch, sq_chains);

  std::vector<TwoFace> faces;
  for (auto& chain : hex_chains) {
    faces.push_back({TwoFaceKind::Hexagon, cyclic_order(refining_vertices(chain, n)), chain});
  }
  for (auto& chain : sq_chains) {
    faces.push_back({TwoFaceKind::Square, cyclic_order(refining_vertices(chain, n)), chain});
  }
  std::sort(faces.begin(), faces.end(), [](const TwoFace& a, const TwoFace& b) {
    if (a.kind != b.kind) return a.kind == TwoFaceKind::Hexagon;
    return a.vertices < b.vertices;
  });
  return faces;
}

std::size_t Graph::edge_index(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
  if (it == edges.end() || *it != std::make_pair(a, b)) return npos;
  return static_cast<std::size_t>(it - edges.begin());
}

std::size_t HypersimplexGraph::index_of(SubsetMask s) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
  if (it == vertices.end() || *it != s) return npos;
  return static_cast<std::size_t>(it - vertices.begin());
}

namespace {

void finish_adjacency(Graph& g) {
  std::sort(g.edges.begin(), g.edges.end());
  g.adjacency.assign(g.vertex_count, {});
  for (auto [a, b] : g.edges) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
}

}  // namespace

PermutahedronGraph permutahedron_graph(int n) {
  if (n < 2) throw InputError("permutahedron_graph needs n >= 2");
  PermutahedronGraph g;
  g.n = n;
  g.vertices = all_permutations(n);
  g.vertex_count = g.vertices.size();
  std::vector<FaceFlag> flags;
  for (const auto& v : g.vertices) flags.push_back(vertex_to_flag(v));
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<SubsetMask, SubsetMask>>> tagged;
  for (std::size_t a = 0; a < g.vertex_count; ++a) {
    for (std::size_t b = a + 1; b < g.vertex_count; ++b) {
      int level = 0;
      if (flag_difference(flags[a], flags[b], level) == 1) {
        tagged.push_back({{a, b}, {flags[a].constituents[level], flags[b].constituents[level]}});
      }
    }
  }
  for (auto& [e, tag] : tagged) {
    g.edges.push_back(e);
    g.edge_tags.push_back(tag);
  }
  finish_adjacency(g);
  if (n >= 3) {
    for (const auto& face : enumerate_two_faces(n)) {
      std::vector<std::size_t> walk;
      for (const auto& v : face.vertices) walk.push_back(permutation_index(v));
      g.faces.push_back(std::move(walk));
    }
  }
  return g;
}

HypersimplexGraph hypersimplex_graph(int d, int n) {
  if (n < 1 || n > kMaxGround || d < 0 || d > n) throw InputError("hypersimplex_graph: bad (d, n)");
  HypersimplexGraph g;
  g.n = n;
  g.d = d;
  g.vertices = k_subsets(n, d);
  g.vertex_count = g.vertices.size();
  for (std::size_t a = 0; a < g.vertex_count; ++a) {
    for (std::size_t b = a + 1; b < g.vertex_count; ++b) {
      if ((g.vertices[a] ^ g.vertices[b]).size() == 2) g.edges.emplace_back(a, b);
    }
  }
  finish_adjacency(g);
  // triangles: three d-sets sharing a (d-1)-set, or inside a common (d+1)-set
  for (int type = 0; type < 2; ++type) {
    int core_size = type == 0 ? d - 1 : d - 2;
    if (core_size < 0) continue;
    for (const auto& core : k_subsets(n, core_size)) {
      auto outside = SubsetMask::full(n).minus(core).elements();
      const int m = static_cast<int>(outside.size());
      for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
          for (int z = y + 1; z < m; ++z) {
            int i = outside[x], j = outside[y], k = outside[z];
            std::vector<SubsetMask> tri;
            if (type == 0) {
              tri = {core.with(i), core.with(j), core.with(k)};
            } else {
              tri = {core.with(i).with(j), core.with(j).with(k), core.with(i).with(k)};
            }
            std::vector<std::size_t> walk;
            for (auto s : tri) walk.push_back(g.index_of(s));
            g.faces.push_back(std::move(walk));
          }
        }
      }
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> symmetry_generators(int n) {
  require_perm_n(n, 2);
  const auto vertices = all_permutations(n);
  std::vector<std::vector<std::size_t>> gens;
  for (int i = 1; i < n; ++i) {
    std::vector<std::size_t> map;
    for (const auto& v : vertices) {
      auto images = v.images();
      std::swap(images[i - 1], images[i]);
      map.push_back(permutation_index(Permutation(images)));
    }
    gens.push_back(std::move(map));
  }
  if (n >= 3) {
    // x_i -> n + 1 - x_{n+1-i}; equals the reflection in x_1 - x_2 - x_{n-1} + x_n for n = 3, 4
    std::vector<std::size_t> map;
    for (const auto& v : vertices) {
      std::vector<int> images(n);
      for (int p = 1; p <= n; ++p) images[p - 1] = n + 1 - v(n + 1 - p);
      map.push_back(permutation_index(Permutation(images)));
    }
    gens.push_back(std::move(map));
  }
  return gens;
}

std::size_t group_order(const std::vector<std::vector<std::size_t>>& generators) {
  if (generators.empty()) return 1;
  const std::size_t size = generators.front().size();
  std::vector<std::size_t> id(size);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators) {
        std::vector<std::size_t> composed(size);
        for (std::size_t x = 0; x < size; ++x) composed[x] = s[g[x]];
        if (seen.insert(composed).second) next.push_back(std::move(composed));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace permsub
