#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "core/error.hpp"

namespace valkit {

// Exact rational scalar used everywhere a value can leave the integers.
// cpp_rational keeps numerator/denominator in canonical reduced form with
// positive denominator, which is exactly the normal form the wire format
// wants.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Wire format is "p" or "p/q" with q > 0 and gcd(p, q) = 1. The parser is
// more forgiving (accepts unreduced "2/4" and negative denominators) and
// normalizes; the writer always emits the canonical form.
Rat parse_rat(const std::string& text, const std::string& where = {});
std::string rat_str(const Rat& r);

// Exact double conversion helpers for the Monte Carlo layer.
double rat_to_double(const Rat& r);
Rat rat_from_double(double x);  // exact binary expansion, error on NaN/inf

// Floor of p/q as a big integer (toward minus infinity).
BigInt rat_floor(const Rat& r);
std::int64_t checked_int64(const BigInt& v, const std::string& what);

}  // namespace valkit
