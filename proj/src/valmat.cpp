#include "permsub/valmat.hpp"

#include <algorithm>
#include <functional>

#include "permsub/exactgeom.hpp"

namespace permsub {

namespace {

void require_ground(int n, int d, const char* where) {
  if (n < 1 || n > kMaxGround || d < 0 || d > n) {
    throw InputError(std::string(where) + ": invalid (n, d) = (" + std::to_string(n) + ", " + std::to_string(d) + ")");
  }
}

using OptQ = std::optional<Rational>;

OptQ add(const OptQ& a, const OptQ& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// Minimum over finite terms is attained at least twice; true when all
// terms are infinite.
bool min_attained_twice(const std::vector<OptQ>& terms) {
  const Rational* best = nullptr;
  int count = 0;
  for (const auto& t : terms) {
    if (!t) continue;
    if (best == nullptr || *t < *best) {
      best = &*t;
      count = 1;
    } else if (*t == *best) {
      ++count;
    }
  }
  return best == nullptr || count >= 2;
}

std::vector<int> outside(SubsetMask s) { return SubsetMask::full(s.n()).minus(s).elements(); }

}  // namespace

bool satisfies_basis_exchange(int n, const std::vector<SubsetMask>& bases) {
  if (bases.empty()) return false;
  std::vector<bool> is_basis(std::size_t{1} << n, false);
  for (auto b : bases) is_basis[b.bits()] = true;
  for (auto b1 : bases) {
    for (auto b2 : bases) {
      for (int x : b1.minus(b2).elements()) {
        bool found = false;
        for (int y : b2.minus(b1).elements()) {
          if (is_basis[b1.without(x).with(y).bits()]) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

Matroid Matroid::from_bases(int n, int d, std::vector<SubsetMask> bases) {
  require_ground(n, d, "Matroid");
  if (n > kMaxMatroidN) throw InputError("Matroid: n above " + std::to_string(kMaxMatroidN));
  for (auto b : bases) {
    if (b.size() != d || b.n() != n) throw InputError("Matroid: basis " + b.to_string() + " has wrong size");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (!satisfies_basis_exchange(n, bases)) throw InputError("Matroid: bases violate the exchange axiom");
  Matroid m;
  m.n_ = n;
  m.d_ = d;
  m.basis_flags_.assign(std::size_t{1} << n, false);
  for (auto b : bases) m.basis_flags_[b.bits()] = true;
  m.bases_ = std::move(bases);
  return m;
}

Matroid Matroid::uniform(int d, int n) { return from_bases(n, d, k_subsets(n, d)); }

bool Matroid::is_uniform() const { return bases_.size() == k_subsets(n_, d_).size(); }

int Matroid::rank_of(SubsetMask t) const {
  int best = 0;
  for (auto b : bases_) best = std::max(best, (b & t).size());
  return best;
}

ValuatedMatroid::ValuatedMatroid(int n, int d) : n_(n), d_(d) {
  require_ground(n, d, "ValuatedMatroid");
  values_.resize(std::size_t{1} << n);
}

ValuatedMatroid ValuatedMatroid::uniform(int n, int d, const std::vector<Rational>& lex_values) {
  ValuatedMatroid mu(n, d);
  const auto sets = k_subsets(n, d);
  if (sets.size() != lex_values.size()) {
    throw InputError("ValuatedMatroid: expected " + std::to_string(sets.size()) + " values");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) mu.set(sets[i], lex_values[i]);
  return mu;
}

ValuatedMatroid ValuatedMatroid::constant(int n, int d, const Rational& c) {
  return uniform(n, d, std::vector<Rational>(k_subsets(n, d).size(), c));
}

void ValuatedMatroid::set(SubsetMask s, Rational value) {
  if (s.size() != d_ || s.bits() >= values_.size()) {
    throw InputError("ValuatedMatroid: subset " + s.to_string() + " is not a " + std::to_string(d_) + "-subset");
  }
  values_[s.bits()] = std::move(value);
}

void ValuatedMatroid::erase(SubsetMask s) { values_[s.bits()].reset(); }

std::vector<std::pair<SubsetMask, Rational>> ValuatedMatroid::entries() const {
  std::vector<std::pair<SubsetMask, Rational>> out;
  for (auto s : k_subsets(n_, d_)) {
    if (values_[s.bits()]) out.emplace_back(s, *values_[s.bits()]);
  }
  return out;
}

std::vector<SubsetMask> ValuatedMatroid::support_sets() const {
  std::vector<SubsetMask> out;
  for (auto s : k_subsets(n_, d_)) {
    if (values_[s.bits()]) out.push_back(s);
  }
  return out;
}

bool ValuatedMatroid::has_uniform_support() const {
  for (auto s : k_subsets(n_, d_)) {
    if (!values_[s.bits()]) return false;
  }
  return true;
}

Matroid ValuatedMatroid::support() const { return Matroid::from_bases(n_, d_, support_sets()); }

CheckResult check_plucker(const ValuatedMatroid& mu) {
  CheckResult result;
  const int d = mu.rank();
  if (d < 2) return result;
  for (auto s : k_subsets(mu.n(), d - 2)) {
    const auto rest = outside(s);
    const int m = static_cast<int>(rest.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c < m; ++c) {
          for (int e = c + 1; e < m; ++e) {
            const int i = rest[a], j = rest[b], k = rest[c], l = rest[e];
            auto v = [&](int x, int y) { return mu.value(s.with(x).with(y)); };
            std::vector<OptQ> terms{add(v(i, j), v(k, l)), add(v(i, k), v(j, l)), add(v(i, l), v(j, k))};
            ++result.relations_checked;
            if (!min_attained_twice(terms)) {
              result.violation = Violation{"plucker", s, {i, j, k, l}, terms, "minimum attained once"};
              return result;
            }
          }
        }
      }
    }
  }
  return result;
}

CheckResult check_incidence_relations(const ValuatedMatroid& mu, const ValuatedMatroid& nu) {
  if (mu.n() != nu.n() || nu.rank() != mu.rank() + 1) {
    throw InputError("incidence relations need ranks d and d+1 on the same ground set");
  }
  CheckResult result;
  const int d = mu.rank();
  if (d < 1) return result;
  for (auto s : k_subsets(mu.n(), d - 1)) {
    const auto rest = outside(s);
    const int m = static_cast<int>(rest.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c < m; ++c) {
          const int i = rest[a], j = rest[b], k = rest[c];
          std::vector<OptQ> terms{add(mu.value(s.with(i)), nu.value(s.with(j).with(k))),
                                  add(mu.value(s.with(j)), nu.value(s.with(i).with(k))),
                                  add(mu.value(s.with(k)), nu.value(s.with(i).with(j)))};
          ++result.relations_checked;
          if (!min_attained_twice(terms)) {
            result.violation = Violation{"incidence", s, {i, j, k}, terms, "minimum attained once"};
            return result;
          }
        }
      }
    }
  }
  return result;
}

CheckResult check_incidence(const ValuatedMatroid& mu, const ValuatedMatroid& nu) {
  auto result = check_incidence_relations(mu, nu);
  if (!result.pass()) return result;
  if (mu.has_uniform_support() && nu.has_uniform_support()) return result;
  if (!is_quotient(mu.support(), nu.support())) {
    result.violation = Violation{"quotient", SubsetMask(0, mu.n()), {}, {}, "supports do not form a matroid quotient"};
  }
  return result;
}

CheckResult check_quotient(const ValuatedMatroid& mu, const ValuatedMatroid& nu) {
  if (mu.n() != nu.n() || mu.rank() >= nu.rank()) throw InputError("check_quotient needs ranks d < e on one ground set");
  CheckResult result;
  const auto small = mu.entries();
  const auto large = nu.entries();
  for (const auto& [set_i, val_i] : small) {
    for (const auto& [set_j, val_j] : large) {
      for (int i : set_i.minus(set_j).elements()) {
        ++result.relations_checked;
        OptQ best;
        for (int j : set_j.minus(set_i).elements()) {
          OptQ t = add(mu.value(set_i.without(i).with(j)), nu.value(set_j.without(j).with(i)));
          if (t && (!best || *t < *best)) best = t;
        }
        if (!best || val_i + val_j < *best) {
          result.violation = Violation{"quotient-exchange", set_i, {i}, {val_i + val_j, best},
                                       "exchange fails against " + set_j.to_string()};
          return result;
        }
      }
    }
  }
  return result;
}

CheckResult check_positive_plucker(const ValuatedMatroid& mu) {
  if (!mu.has_uniform_support()) throw InputError("positive Plücker relations need uniform support");
  CheckResult result;
  const int d = mu.rank();
  if (d < 2) return result;
  for (auto s : k_subsets(mu.n(), d - 2)) {
    const auto rest = outside(s);
    const int m = static_cast<int>(rest.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c < m; ++c) {
          for (int e = c + 1; e < m; ++e) {
            const int i = rest[a], j = rest[b], k = rest[c], l = rest[e];
            auto v = [&](int x, int y) { return *mu.value(s.with(x).with(y)); };
            Rational lhs = v(i, k) + v(j, l);
            Rational first = v(i, j) + v(k, l);
            Rational second = v(i, l) + v(j, k);
            ++result.relations_checked;
            if (lhs != std::min(first, second)) {
              result.violation = Violation{"positive-plucker", s, {i, j, k, l}, {lhs, first, second},
                                           "v(Sik)+v(Sjl) differs from min(v(Sij)+v(Skl), v(Sil)+v(Sjk))"};
              return result;
            }
          }
        }
      }
    }
  }
  return result;
}

CheckResult check_positive_incidence(const ValuatedMatroid& nu, const ValuatedMatroid& mu) {
  if (nu.n() != mu.n() || mu.rank() != nu.rank() + 1) {
    throw InputError("positive incidence needs ranks d and d+1 on the same ground set");
  }
  if (!nu.has_uniform_support() || !mu.has_uniform_support()) {
    throw InputError("positive incidence relations need uniform supports");
  }
  CheckResult result;
  const int d = nu.rank();
  if (d < 1) return result;
  for (auto s : k_subsets(nu.n(), d - 1)) {
    const auto rest = outside(s);
    const int m = static_cast<int>(rest.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c < m; ++c) {
          const int i = rest[a], j = rest[b], k = rest[c];
          Rational lhs = *nu.value(s.with(j)) + *mu.value(s.with(i).with(k));
          Rational first = *nu.value(s.with(i)) + *mu.value(s.with(j).with(k));
          Rational second = *nu.value(s.with(k)) + *mu.value(s.with(i).with(j));
          ++result.relations_checked;
          if (lhs != std::min(first, second)) {
            result.violation = Violation{"positive-incidence", s, {i, j, k}, {lhs, first, second},
                                         "nu(Sj)+mu(Sik) differs from min(nu(Si)+mu(Sjk), nu(Sk)+mu(Sij))"};
            return result;
          }
        }
      }
    }
  }
  return result;
}

ValuatedMatroid truncate(const ValuatedMatroid& mu) {
  if (mu.rank() < 1) throw InputError("truncate needs rank >= 1");
  ValuatedMatroid out(mu.n(), mu.rank() - 1);
  for (auto s : k_subsets(mu.n(), mu.rank() - 1)) {
    OptQ best;
    for (int e : outside(s)) {
      const auto& v = mu.value(s.with(e));
      if (v && (!best || *v < *best)) best = v;
    }
    if (best) out.set(s, *best);
  }
  return out;
}

ValuatedMatroid elongate(const ValuatedMatroid& mu) {
  if (mu.rank() > mu.n() - 1) throw InputError("elongate needs rank <= n-1");
  ValuatedMatroid out(mu.n(), mu.rank() + 1);
  for (auto s : k_subsets(mu.n(), mu.rank() + 1)) {
    OptQ best;
    for (int e : s.elements()) {
      const auto& v = mu.value(s.without(e));
      if (v && (!best || *v < *best)) best = v;
    }
    if (best) out.set(s, *best);
  }
  return out;
}

std::vector<ValuatedMatroid> embed_flag(const ValuatedMatroid& mu) {
  const int n = mu.n();
  const int d = mu.rank();
  std::vector<ValuatedMatroid> flag(n);
  if (d >= 1) flag[d - 1] = mu;
  for (int r = d - 1; r >= 1; --r) flag[r - 1] = truncate(flag[r]);
  for (int r = d + 1; r <= n; ++r) flag[r - 1] = elongate(r - 1 == d ? mu : flag[r - 2]);
  return flag;
}

ValuatedMatroid corank_valuation(const Matroid& m) {
  ValuatedMatroid out(m.n(), m.rank());
  for (auto t : k_subsets(m.n(), m.rank())) out.set(t, Rational(m.rank() - m.rank_of(t)));
  return out;
}

bool is_quotient(const Matroid& m, const Matroid& n) {
  if (m.n() != n.n() || n.rank() != m.rank() + 1) throw InputError("is_quotient needs ranks d and d+1");
  const int size = m.n();
  PointConfiguration config;
  config.dim = static_cast<std::size_t>(size + 1);
  auto lift = [&](SubsetMask b, int extra) {
    QVector p;
    for (int e = 1; e <= size; ++e) p.emplace_back(b.contains(e) ? 1 : 0);
    p.emplace_back(extra);
    config.points.push_back(std::move(p));
  };
  for (auto b : m.bases()) lift(b, 1);
  for (auto b : n.bases()) lift(b, 0);
  const Hull h = hull(config);
  for (auto [a, b] : h.edges) {
    int plus = 0, minus = 0;
    for (std::size_t c = 0; c < config.dim; ++c) {
      Rational diff = config.points[a][c] - config.points[b][c];
      if (diff == 1) {
        ++plus;
      } else if (diff == -1) {
        ++minus;
      } else if (diff != 0) {
        return false;
      }
    }
    if (plus != 1 || minus != 1) return false;
  }
  return true;
}

ValuatedMatroid minor(const ValuatedMatroid& mu, SubsetMask remove, SubsetMask contract) {
  if ((remove & contract).size() != 0) throw InputError("minor: deleted and contracted sets overlap");
  const int rank = mu.rank() - contract.size();
  if (rank < 0) throw InputError("minor: contracting more elements than the rank");
  std::vector<int> kept;
  for (int e = 1; e <= mu.n(); ++e) {
    if (!remove.contains(e) && !contract.contains(e)) kept.push_back(e);
  }
  const int m = static_cast<int>(kept.size());
  ValuatedMatroid out(m, rank);
  for (auto c : k_subsets(m, rank)) {
    SubsetMask original = contract;
    for (int e : c.elements()) original = original.with(kept[e - 1]);
    const auto& v = mu.value(original);
    if (v) out.set(c, *v);
  }
  return out;
}

PolyInT::PolyInT(std::vector<std::pair<long, Rational>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [e, c] : terms) {
    if (!terms_.empty() && terms_.back().first == e) {
      terms_.back().second += c;
    } else {
      terms_.emplace_back(e, c);
    }
  }
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

PolyInT operator+(const PolyInT& a, const PolyInT& b) {
  auto terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return PolyInT(std::move(terms));
}

PolyInT operator-(const PolyInT& a, const PolyInT& b) {
  auto terms = a.terms_;
  for (const auto& [e, c] : b.terms_) terms.emplace_back(e, -c);
  return PolyInT(std::move(terms));
}

PolyInT operator*(const PolyInT& a, const PolyInT& b) {
  std::vector<std::pair<long, Rational>> terms;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) terms.emplace_back(ea + eb, ca * cb);
  }
  return PolyInT(std::move(terms));
}

PolyInT determinant(const TMatrix& square) {
  const std::size_t k = square.size();
  if (k == 0) return PolyInT::constant(1);
  if (k == 1) return square[0][0];
  PolyInT total;
  for (std::size_t col = 0; col < k; ++col) {
    if (square[0][col].is_zero()) continue;
    TMatrix sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<PolyInT> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != col) row.push_back(square[r][c]);
      }
      sub.push_back(std::move(row));
    }
    PolyInT term = square[0][col] * determinant(sub);
    total = (col % 2 == 0) ? total + term : total - term;
  }
  return total;
}

Tropicalization tropicalize_matrix(const TMatrix& a, int rows) {
  if (a.empty()) throw InputError("tropicalize: empty matrix");
  const int n = static_cast<int>(a.front().size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw InputError("tropicalize: ragged matrix");
  }
  if (rows < 1 || rows > static_cast<int>(a.size()) || rows > n) {
    throw InputError("tropicalize: rows must lie in 1..min(#rows, #cols)");
  }
  Tropicalization out;
  for (int i = 1; i <= rows; ++i) {
    ValuatedMatroid mu(n, i);
    std::map<SubsetMask, int> signs;
    std::vector<SubsetMask> zeros;
    for (auto cols : k_subsets(n, i)) {
      TMatrix minor_matrix;
      const auto picked = cols.elements();
      for (int r = 0; r < i; ++r) {
        std::vector<PolyInT> row;
        for (int c : picked) row.push_back(a[r][c - 1]);
        minor_matrix.push_back(std::move(row));
      }
      PolyInT det = determinant(minor_matrix);
      if (det.is_zero()) {
        zeros.push_back(cols);
        continue;
      }
      mu.set(cols, Rational(det.valuation()));
      signs[cols] = sgn(det.lowest_coefficient());
    }
    if (signs.empty()) throw InputError("tropicalize: rows 1.." + std::to_string(i) + " are linearly dependent");
    out.flag.push_back(std::move(mu));
    out.signs.push_back(std::move(signs));
    out.zero_minors.push_back(std::move(zeros));
  }
  return out;
}

}  // namespace permsub
