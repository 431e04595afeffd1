#include "core/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace valkit {

namespace {

bool valid_int_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text, const std::string& where) {
  auto bad = [&]() -> Rat {
    fail(ErrCode::parse, "bad rational literal '" + text + "'", where);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int_literal(text)) bad();
    return Rat(BigInt(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid_int_literal(num) || !valid_int_literal(den)) bad();
  BigInt d(den);
  if (d == 0) fail(ErrCode::parse, "zero denominator in '" + text + "'", where);
  return Rat(BigInt(num), d);
}

std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

double rat_to_double(const Rat& r) { return static_cast<double>(r); }

Rat rat_from_double(double x) {
  if (!std::isfinite(x))
    fail(ErrCode::domain, "cannot convert non-finite double to rational");
  return Rat(x);  // exact: doubles are dyadic rationals
}

BigInt rat_floor(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  // integer division truncates toward zero; fix up negatives
  if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

std::int64_t checked_int64(const BigInt& v, const std::string& what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    fail(ErrCode::domain, what + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace valkit
