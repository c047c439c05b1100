#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permsub {

/// Exact rational number. GMP keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

using QVector = std::vector<Rational>;

/// Thrown for malformed user input (bad JSON shape, bad rational string, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q". Rejects zero denominators and garbage.
Rational parse_rational(std::string_view text);

/// Canonical textual form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Smallest integer >= value.
Integer ceil(const Rational& value);

/// Scales a rational vector to the primitive integer vector on the same ray.
/// The zero vector is returned unchanged.
QVector primitive(const QVector& v);

Rational dot(const QVector& a, const QVector& b);

}  // namespace permsub
