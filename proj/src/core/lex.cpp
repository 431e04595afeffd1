#include "core/lex.hpp"

#include <sstream>

namespace valkit {

namespace {
void check_rank(const LexTuple& a, const LexTuple& b) {
  if (a.rank() != b.rank())
    fail(ErrCode::dimension, "lex tuples of different rank (" +
                                 std::to_string(a.rank()) + " vs " +
                                 std::to_string(b.rank()) + ")");
}
}  // namespace

LexTuple& LexTuple::operator+=(const LexTuple& o) {
  check_rank(*this, o);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
  return *this;
}

LexTuple& LexTuple::operator-=(const LexTuple& o) {
  check_rank(*this, o);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
  return *this;
}

std::string LexTuple::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

Ord lex_cmp(const LexTuple& a, const LexTuple& b) {
  check_rank(a, b);
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    if (a.v[i] < b.v[i]) return Ord::less;
    if (a.v[i] > b.v[i]) return Ord::greater;
  }
  return Ord::equal;
}

bool lex_nonneg(const LexTuple& a) {
  for (const auto& x : a.v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return true;  // zero
}

bool lex_positive(const LexTuple& a) {
  for (const auto& x : a.v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

LexTuple lex_min(const LexTuple& a, const LexTuple& b) {
  return lex_cmp(a, b) == Ord::greater ? b : a;
}

}  // namespace valkit
