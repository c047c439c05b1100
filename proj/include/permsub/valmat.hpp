#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permsub/rational.hpp"
#include "permsub/subset.hpp"

namespace permsub {

/// Largest ground set on which matroid axioms are verified.
inline constexpr int kMaxMatroidN = 8;

class Matroid {
 public:
  Matroid() = default;
  /// Throws InputError unless the bases satisfy basis exchange.
  static Matroid from_bases(int n, int d, std::vector<SubsetMask> bases);
  static Matroid uniform(int d, int n);

  int n() const { return n_; }
  int rank() const { return d_; }
  const std::vector<SubsetMask>& bases() const { return bases_; }
  bool is_basis(SubsetMask s) const { return basis_flags_[s.bits()]; }
  bool is_uniform() const;
  /// rank_M(T) = max |T ∩ B| over bases B.
  int rank_of(SubsetMask t) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.bases_ == b.bases_;
  }

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<SubsetMask> bases_;
  std::vector<bool> basis_flags_;
};

/// Basis exchange: for B1, B2 and x in B1 \ B2 some y in B2 \ B1 makes
/// B1 - x + y a basis.
bool satisfies_basis_exchange(int n, const std::vector<SubsetMask>& bases);

/// A function on the d-subsets of [n]; a missing value means +infinity.
class ValuatedMatroid {
 public:
  ValuatedMatroid() = default;
  ValuatedMatroid(int n, int d);
  /// Values listed for all d-subsets in lexicographic order.
  static ValuatedMatroid uniform(int n, int d, const std::vector<Rational>& lex_values);
  static ValuatedMatroid constant(int n, int d, const Rational& c);

  int n() const { return n_; }
  int rank() const { return d_; }
  void set(SubsetMask s, Rational value);
  void erase(SubsetMask s);
  const std::optional<Rational>& value(SubsetMask s) const { return values_[s.bits()]; }
  /// Finite values in lexicographic order of their subsets.
  std::vector<std::pair<SubsetMask, Rational>> entries() const;
  std::vector<SubsetMask> support_sets() const;
  bool has_uniform_support() const;
  /// Throws InputError if the support violates basis exchange.
  Matroid support() const;

  friend bool operator==(const ValuatedMatroid&, const ValuatedMatroid&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<std::optional<Rational>> values_;
};

/// First failing relation of a checker, in scan order.
struct Violation {
  std::string relation;  // "plucker", "incidence", "positive-plucker", ...
  SubsetMask s;
  std::vector<int> indices;
  std::vector<std::optional<Rational>> terms;
  std::string detail;
};

struct CheckResult {
  std::optional<Violation> violation;
  std::size_t relations_checked = 0;
  bool pass() const { return !violation.has_value(); }
};

/// Three-term tropical Plücker relations; absent values are +infinity and
/// quadruples with no finite term are skipped.
CheckResult check_plucker(const ValuatedMatroid& mu);

/// Three-term tropical incidence relations between ranks d and d+1 only.
CheckResult check_incidence_relations(const ValuatedMatroid& mu, const ValuatedMatroid& nu);

/// Incidence relations plus the geometric quotient test on the supports.
CheckResult check_incidence(const ValuatedMatroid& mu, const ValuatedMatroid& nu);

/// Exchange form of a valuated quotient for any ranks d < e:
/// mu(I) + nu(J) >= min_{j in J\I} mu(I-i+j) + nu(J-j+i) for i in I \ J.
CheckResult check_quotient(const ValuatedMatroid& mu, const ValuatedMatroid& nu);

/// v(Sik) + v(Sjl) = min(v(Sij) + v(Skl), v(Sil) + v(Sjk)) for i<j<k<l.
/// Requires uniform support.
CheckResult check_positive_plucker(const ValuatedMatroid& mu);

/// nu(Sj) + mu(Sik) = min(nu(Si) + mu(Sjk), nu(Sk) + mu(Sij)) for i<j<k.
/// Requires uniform supports of consecutive ranks.
CheckResult check_positive_incidence(const ValuatedMatroid& nu, const ValuatedMatroid& mu);

/// mu^(1)(S) = min over T ⊃ S of mu(T).
ValuatedMatroid truncate(const ValuatedMatroid& mu);
/// mu^(-1)(S) = min over T ⊂ S of mu(T).
ValuatedMatroid elongate(const ValuatedMatroid& mu);
/// (mu^(d-1), ..., mu^(1), mu, mu^(-1), ..., mu^(d-n)): ranks 1..n.
std::vector<ValuatedMatroid> embed_flag(const ValuatedMatroid& mu);

/// T ↦ rk(M) - rank_M(T) on every rk(M)-subset.
ValuatedMatroid corank_valuation(const Matroid& m);

/// conv(M×{1} ∪ N×{0}) has only edges parallel to e_i - e_j.
bool is_quotient(const Matroid& m, const Matroid& n);

/// Contraction by `contract` (must lie in some finite basis) followed by
/// deletion of `remove`, relabelled onto the remaining elements in order.
ValuatedMatroid minor(const ValuatedMatroid& mu, SubsetMask remove, SubsetMask contract);

/// Laurent polynomial in t with rational coefficients.
class PolyInT {
 public:
  PolyInT() = default;
  /// Terms may be unsorted or repeated; they are merged and zeros dropped.
  explicit PolyInT(std::vector<std::pair<long, Rational>> terms);
  static PolyInT constant(const Rational& c) { return PolyInT({{0, c}}); }
  static PolyInT monomial(long exponent, const Rational& c) { return PolyInT({{exponent, c}}); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<long, Rational>>& terms() const { return terms_; }
  /// Lowest exponent; undefined for zero.
  long valuation() const { return terms_.front().first; }
  const Rational& lowest_coefficient() const { return terms_.front().second; }

  friend PolyInT operator+(const PolyInT& a, const PolyInT& b);
  friend PolyInT operator-(const PolyInT& a, const PolyInT& b);
  friend PolyInT operator*(const PolyInT& a, const PolyInT& b);
  friend bool operator==(const PolyInT&, const PolyInT&) = default;

 private:
  std::vector<std::pair<long, Rational>> terms_;
};

using TMatrix = std::vector<std::vector<PolyInT>>;

PolyInT determinant(const TMatrix& square);

struct Tropicalization {
  std::vector<ValuatedMatroid> flag;             // mu_1, ..., mu_k
  std::vector<std::map<SubsetMask, int>> signs;  // sign of each lowest coefficient
  std::vector<std::vector<SubsetMask>> zero_minors;
};

/// mu_i(T) = valuation of the minor on rows 1..i and columns T, i = 1..rows.
Tropicalization tropicalize_matrix(const TMatrix& a, int rows);

}  // namespace permsub
