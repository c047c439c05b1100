#include "permsub/rational.hpp"

#include <cctype>

namespace permsub {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer numerator(n);
  Integer denominator{std::string(den)};
  if (denominator == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  Rational copy(value);
  copy.canonicalize();  // Rational(p, q) from integers is not reduced
  return copy.get_str();
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

QVector primitive(const QVector& v) {
  Integer lcm = 1;
  for (const auto& x : v) lcm = ::lcm(lcm, Integer(x.get_den()));
  Integer g = 0;
  std::vector<Integer> scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) {
    Integer s = x.get_num() * (lcm / x.get_den());
    g = ::gcd(g, s);
    scaled.push_back(s);
  }
  if (g == 0) return v;
  QVector out;
  out.reserve(v.size());
  for (const auto& s : scaled) out.emplace_back(Integer(s / g));
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace permsub
