#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "permsub/fanenum.hpp"
#include "permsub/flagsub.hpp"
#include "permsub/valmat.hpp"

namespace permsub {

using Json = nlohmann::ordered_json;

/// Schema version stamped into every document this library writes.
inline constexpr const char* kFormatVersion = "1.0";

/// Parses JSON text; syntax errors become InputError.
Json parse_json(std::string_view text);

/// Rationals accept "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j, const std::string& where);
Json rational_to_json(const Rational& q);

/// { "n": int, "d": int, "values": { "134": "p/q", ... } }; missing keys are +∞.
ValuatedMatroid matroid_from_json(const Json& j, const std::string& where = "$");
Json matroid_to_json(const ValuatedMatroid& mu);

/// A list of valuated matroids, or { "flag": [...] }.
ValuatedFlagMatroid flag_from_json(const Json& j, const std::string& where = "$");
Json flag_to_json(const ValuatedFlagMatroid& flag);

/// { "n": int, "heights": { "2134": "p/q", ... } } covering every vertex.
HeightFunction heights_from_json(const Json& j, const std::string& where = "$");
Json heights_to_json(const HeightFunction& w);

/// Rows of entries; an entry is a list of [exponent, "p/q"] pairs. Accepts a
/// bare array or { "matrix": [...] }.
TMatrix tmatrix_from_json(const Json& j, const std::string& where = "$");
Json tmatrix_to_json(const TMatrix& a);

Json violation_to_json(const Violation& v);
Json check_to_json(const CheckResult& r);
Json cell_to_json(const Cell& c);
Json skeleton_to_json(const SkeletonReport& r);
Json tropicalization_to_json(const Tropicalization& t);
Json vector_to_json(const QVector& v);

/// Rays, lineality basis, cones by dimension and maximal cones.
Json fan_to_json(const Fan& fan);
Json census_to_json(const FanCensus& c);
Json homology_to_json(const Homology& h);
Json refinement_to_json(const RefinementCensus& r);

/// FNV-1a 64-bit digest of raw input bytes, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace permsub
