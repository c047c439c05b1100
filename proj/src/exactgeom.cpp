#include "permsub/exactgeom.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace permsub {

namespace {

// Fixed-width bitset over constraint indices.
class RowSet {
 public:
  explicit RowSet(std::size_t size = 0) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  RowSet operator&(const RowSet& o) const {
    RowSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= o.words_[w];
    return out;
  }
  bool superset_of(const RowSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((o.words_[w] & ~words_[w]) != 0) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

QVector times_transpose(const QVector& row, const QMatrix& basis) {
  QVector out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(dot(row, b));
  return out;
}

QVector combine(const QMatrix& basis, const QVector& coeffs, std::size_t cols) {
  QVector out(cols, Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t c = 0; c < cols; ++c) out[c] += coeffs[k] * basis[k][c];
  }
  return out;
}

struct DdRay {
  QVector y;
  RowSet tight;
};

}  // namespace

ConeGenerators double_description(const QMatrix& a, std::size_t cols) {
  ConeGenerators out;
  out.lineality = nullspace(a, cols);
  auto rowspace = rref(a, cols).rows;
  const std::size_t r = rowspace.size();
  if (r == 0) return out;

  const std::size_t m = a.size();
  QMatrix reduced;
  reduced.reserve(m);
  for (const auto& row : a) reduced.push_back(times_transpose(row, rowspace));

  // the cone is pointed in row-space coordinates; seed with a simplicial cone
  const auto seed = independent_rows(reduced, r);
  QMatrix seed_matrix;
  for (auto i : seed) seed_matrix.push_back(reduced[i]);
  std::vector<bool> processed(m, false);
  std::vector<DdRay> rays;
  for (std::size_t t = 0; t < r; ++t) {
    QVector e(r, Rational(0));
    e[t] = 1;
    DdRay ray{primitive(solve_square(seed_matrix, e)), RowSet(m)};
    for (std::size_t s = 0; s < r; ++s) {
      if (s != t) ray.tight.set(seed[s]);
    }
    rays.push_back(std::move(ray));
  }
  for (auto i : seed) processed[i] = true;

  for (std::size_t j = 0; j < m; ++j) {
    if (processed[j]) continue;
    processed[j] = true;
    std::vector<Rational> values;
    values.reserve(rays.size());
    for (const auto& ray : rays) values.push_back(dot(reduced[j], ray.y));

    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (values[i] > 0) pos.push_back(i);
      if (values[i] < 0) neg.push_back(i);
    }
    std::vector<DdRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (values[i] < 0) continue;
      DdRay kept = rays[i];
      if (values[i] == 0) kept.tight.set(j);
      next.push_back(std::move(kept));
    }
    if (!neg.empty()) {
      for (auto p : pos) {
        for (auto q : neg) {
          RowSet common = rays[p].tight & rays[q].tight;
          if (common.count() + 2 < r) continue;
          bool adjacent = true;
          for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
            if (t != p && t != q && rays[t].tight.superset_of(common)) adjacent = false;
          }
          if (!adjacent) continue;
          QVector y(r);
          for (std::size_t c = 0; c < r; ++c) y[c] = values[p] * rays[q].y[c] - values[q] * rays[p].y[c];
          common.set(j);
          next.push_back({primitive(y), common});
        }
      }
    }
    rays = std::move(next);
  }

  for (const auto& ray : rays) {
    QVector z(cols, Rational(0));
    for (std::size_t k = 0; k < r; ++k) {
      if (ray.y[k] == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) z[c] += ray.y[k] * rowspace[k][c];
    }
    out.rays.push_back(primitive(z));
  }
  return out;
}

bool Cone::contains(const QVector& x) const {
  for (const auto& e : equalities) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& i : inequalities) {
    if (dot(i, x) < 0) return false;
  }
  return true;
}

Cone cone_solve(const QMatrix& equalities, const QMatrix& inequalities, std::size_t ambient) {
  for (const auto& row : equalities) {
    if (row.size() != ambient) throw InputError("cone_solve: equality row of wrong length");
  }
  for (const auto& row : inequalities) {
    if (row.size() != ambient) throw InputError("cone_solve: inequality row of wrong length");
  }
  Cone cone;
  cone.ambient = ambient;
  cone.equalities = equalities;
  cone.inequalities = inequalities;

  const QMatrix subspace = nullspace(equalities, ambient);
  const std::size_t q = subspace.size();
  QMatrix reduced;
  for (const auto& row : inequalities) reduced.push_back(times_transpose(row, subspace));
  auto gens = double_description(reduced, q);

  QMatrix lineality;
  for (const auto& u : gens.lineality) lineality.push_back(combine(subspace, u, ambient));
  cone.lineality = rref(lineality, ambient).rows;
  cone.lineality_dim = cone.lineality.size();
  const QMatrix orth = orthogonal_basis(cone.lineality);
  for (const auto& u : gens.rays) cone.rays.push_back(primitive(project_out(combine(subspace, u, ambient), orth)));
  std::sort(cone.rays.begin(), cone.rays.end());
  cone.dimension = cone.lineality_dim + rank(cone.rays, ambient);

  std::ostringstream key;
  key << ambient << ";L";
  for (const auto& row : cone.lineality) {
    for (const auto& x : row) key << ',' << x.get_str();
    key << '|';
  }
  key << ";R";
  for (const auto& row : cone.rays) {
    for (const auto& x : row) key << ',' << x.get_str();
    key << '|';
  }
  cone.key = key.str();
  return cone;
}

namespace {

struct SpanCoordinates {
  std::size_t dim = 0;
  std::vector<QVector> coords;  // per point, coordinates in the affine span
};

SpanCoordinates span_coordinates(const PointConfiguration& config) {
  if (config.points.empty()) throw InputError("empty point configuration");
  for (const auto& p : config.points) {
    if (p.size() != config.dim) throw InputError("point of wrong dimension");
  }
  QMatrix diffs;
  const auto& base = config.points.front();
  for (const auto& p : config.points) {
    QVector d(config.dim);
    for (std::size_t c = 0; c < config.dim; ++c) d[c] = p[c] - base[c];
    diffs.push_back(std::move(d));
  }
  auto ech = rref(diffs, config.dim);
  SpanCoordinates out;
  out.dim = ech.pivots.size();
  for (const auto& p : config.points) {
    QVector y;
    for (auto c : ech.pivots) y.push_back(p[c]);
    out.coords.push_back(std::move(y));
  }
  return out;
}

}  // namespace

Hull hull(const PointConfiguration& config) {
  const auto span = span_coordinates(config);
  const std::size_t k = span.dim;
  const std::size_t m = config.points.size();
  Hull out;
  out.affine_dim = k;
  if (k == 0) {
    out.degenerate = true;
    out.vertices = {0};
    return out;
  }

  QMatrix rows;
  for (const auto& y : span.coords) {
    QVector row = y;
    row.emplace_back(1);
    rows.push_back(std::move(row));
  }
  auto gens = double_description(rows, k + 1);
  const auto& facets = gens.rays;

  std::vector<std::vector<std::size_t>> tight_facets(m);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(rows[i], facets[f]) == 0) {
        on.push_back(i);
        tight_facets[i].push_back(f);
      }
    }
    out.facets.push_back(std::move(on));
  }
  auto normals_rank = [&](const std::vector<std::size_t>& fs) {
    QMatrix normals;
    for (auto f : fs) normals.emplace_back(facets[f].begin(), facets[f].begin() + static_cast<std::ptrdiff_t>(k));
    return rank(normals, k);
  };
  for (std::size_t i = 0; i < m; ++i) {
    bool duplicate = false;
    for (std::size_t j = 0; j < i && !duplicate; ++j) duplicate = span.coords[j] == span.coords[i];
    if (!duplicate && normals_rank(tight_facets[i]) == k) out.vertices.push_back(i);
  }
  for (std::size_t a = 0; a < out.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
      const auto& fa = tight_facets[out.vertices[a]];
      const auto& fb = tight_facets[out.vertices[b]];
      std::vector<std::size_t> common;
      std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(common));
      if (common.size() + 1 < k) continue;
      if (normals_rank(common) == k - 1) out.edges.emplace_back(out.vertices[a], out.vertices[b]);
    }
  }
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

std::vector<std::vector<std::size_t>> lower_cells(const PointConfiguration& config, const QVector& heights) {
  if (heights.size() != config.points.size()) throw InputError("lower_cells: one height per point required");
  const auto span = span_coordinates(config);
  const std::size_t k = span.dim;
  const std::size_t m = config.points.size();

  QMatrix lifted_diffs;
  for (std::size_t i = 0; i < m; ++i) {
    QVector d;
    for (std::size_t c = 0; c < k; ++c) d.push_back(span.coords[i][c] - span.coords[0][c]);
    d.push_back(heights[i] - heights[0]);
    lifted_diffs.push_back(std::move(d));
  }
  std::vector<std::vector<std::size_t>> cells;
  if (rank(lifted_diffs, k + 1) == k) {
    // heights are affine on the span: trivial subdivision
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    cells.push_back(std::move(all));
    return cells;
  }
  QMatrix rows;
  for (std::size_t i = 0; i < m; ++i) {
    QVector row = span.coords[i];
    row.push_back(heights[i]);
    row.emplace_back(1);
    rows.push_back(std::move(row));
  }
  auto gens = double_description(rows, k + 2);
  for (const auto& f : gens.rays) {
    if (f[k] <= 0) continue;
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(rows[i], f) == 0) cell.push_back(i);
    }
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

namespace {

// Maximises c·z subject to a z = b, z >= 0 with Bland's rule.
struct SimplexOutcome {
  bool feasible = false;
  bool unbounded = false;
  QVector z;
};

class Tableau {
 public:
  Tableau(QMatrix a, QVector b, std::size_t vars) : vars_(vars) {
    const std::size_t m = a.size();
    for (std::size_t r = 0; r < m; ++r) {
      if (b[r] < 0) {
        for (auto& x : a[r]) x = -x;
        b[r] = -b[r];
      }
      QVector row = std::move(a[r]);
      row.resize(vars + m, Rational(0));
      row[vars + r] = 1;
      row.push_back(b[r]);
      rows_.push_back(std::move(row));
      basis_.push_back(vars + r);
    }
    allowed_.assign(vars + m, true);
  }

  // Returns false if unbounded.
  bool optimise(const QVector& cost) {
    const std::size_t cols = allowed_.size();
    QVector reduced(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) {
      reduced[j] = cost[j];
      for (std::size_t r = 0; r < rows_.size(); ++r) reduced[j] -= cost[basis_[r]] * rows_[r][j];
    }
    while (true) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed_[j] && reduced[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rational ratio = rows_[r].back() / rows_[r][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
      const Rational factor = reduced[enter];
      for (std::size_t j = 0; j < cols; ++j) reduced[j] -= factor * rows_[leave][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    for (std::size_t o = 0; o < rows_.size(); ++o) {
      if (o == r || rows_[o][c] == 0) continue;
      const Rational factor = rows_[o][c];
      for (std::size_t j = 0; j < rows_[o].size(); ++j) rows_[o][j] -= factor * rows_[r][j];
    }
    basis_[r] = c;
  }

  // Pivots artificial variables out of the basis, dropping redundant rows.
  void expel_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < vars_) {
        ++r;
        continue;
      }
      std::size_t col = vars_;
      for (std::size_t j = 0; j < vars_; ++j) {
        if (rows_[r][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == vars_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        continue;
      }
      pivot(r, col);
      ++r;
    }
    for (std::size_t j = vars_; j < allowed_.size(); ++j) allowed_[j] = false;
  }

  QVector solution() const {
    QVector z(allowed_.size(), Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) z[basis_[r]] = rows_[r].back();
    return z;
  }

  std::size_t artificial_begin() const { return vars_; }
  std::size_t columns() const { return allowed_.size(); }

 private:
  std::size_t vars_;
  QMatrix rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

SimplexOutcome simplex(const QMatrix& a, const QVector& b, const QVector& c) {
  const std::size_t vars = c.size();
  Tableau tableau(a, b, vars);
  QVector phase1(tableau.columns(), Rational(0));
  for (std::size_t j = tableau.artificial_begin(); j < tableau.columns(); ++j) phase1[j] = -1;
  tableau.optimise(phase1);
  auto z = tableau.solution();
  for (std::size_t j = tableau.artificial_begin(); j < z.size(); ++j) {
    if (z[j] != 0) return {};
  }
  tableau.expel_artificials();
  QVector phase2(tableau.columns(), Rational(0));
  for (std::size_t j = 0; j < vars; ++j) phase2[j] = c[j];
  SimplexOutcome out;
  out.feasible = true;
  out.unbounded = !tableau.optimise(phase2);
  z = tableau.solution();
  z.resize(vars);
  out.z = std::move(z);
  return out;
}

}  // namespace

LpResult lp_feasible(const std::vector<AffineRow>& equalities, const std::vector<AffineRow>& strict,
                     const std::vector<AffineRow>& weak, std::size_t dim) {
  for (const auto* group : {&equalities, &strict, &weak}) {
    for (const auto& row : *group) {
      if (row.coeffs.size() != dim) throw InputError("lp_feasible: row of wrong length");
    }
  }
  // columns: x+ | x- | weak slacks | strict slacks | t | t slack
  const std::size_t w = weak.size();
  const std::size_t s = strict.size();
  const bool has_t = s > 0;
  const std::size_t t_col = 2 * dim + w + s;
  const std::size_t vars = t_col + (has_t ? 2 : 0);

  QMatrix a;
  QVector b;
  auto add_row = [&](const AffineRow& row, std::size_t slack, bool with_t) {
    QVector r(vars, Rational(0));
    for (std::size_t c = 0; c < dim; ++c) {
      r[c] = row.coeffs[c];
      r[dim + c] = -row.coeffs[c];
    }
    if (slack != vars) r[slack] = -1;
    if (with_t) r[t_col] = -1;
    a.push_back(std::move(r));
    b.push_back(-row.constant);
  };
  for (const auto& row : equalities) add_row(row, vars, false);
  for (std::size_t i = 0; i < w; ++i) add_row(weak[i], 2 * dim + i, false);
  for (std::size_t i = 0; i < s; ++i) add_row(strict[i], 2 * dim + w + i, true);
  QVector cost(vars, Rational(0));
  if (has_t) {
    QVector bound(vars, Rational(0));
    bound[t_col] = 1;
    bound[t_col + 1] = 1;
    a.push_back(std::move(bound));
    b.emplace_back(1);
    cost[t_col] = 1;
  }

  auto outcome = simplex(a, b, cost);
  LpResult result;
  if (!outcome.feasible) return result;
  if (has_t && outcome.z[t_col] <= 0) return result;
  result.feasible = true;
  result.witness.resize(dim);
  for (std::size_t c = 0; c < dim; ++c) result.witness[c] = outcome.z[c] - outcome.z[dim + c];
  return result;
}

std::string matrix_to_json(const QMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    out.push_back(std::move(r));
  }
  return out.dump();
}

}  // namespace permsub
