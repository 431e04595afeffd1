#pragma once

#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/rational.hpp"

namespace valkit {

enum class Ord { less, equal, greater };

// A point of R^k ordered lexicographically. k is fixed per computation; all
// binary operations insist on matching lengths.
struct LexTuple {
  std::vector<Rat> v;

  LexTuple() = default;
  explicit LexTuple(std::vector<Rat> vals) : v(std::move(vals)) {}
  static LexTuple zero(std::size_t k) { return LexTuple(std::vector<Rat>(k)); }

  std::size_t rank() const { return v.size(); }

  LexTuple& operator+=(const LexTuple& o);
  LexTuple& operator-=(const LexTuple& o);
  friend LexTuple operator+(LexTuple a, const LexTuple& b) { return a += b; }
  friend LexTuple operator-(LexTuple a, const LexTuple& b) { return a -= b; }
  friend LexTuple operator*(const Rat& c, LexTuple a) {
    for (auto& x : a.v) x *= c;
    return a;
  }

  std::string str() const;  // "(a, b, c)" with rational entries
};

Ord lex_cmp(const LexTuple& a, const LexTuple& b);

inline bool lex_less(const LexTuple& a, const LexTuple& b) {
  return lex_cmp(a, b) == Ord::less;
}
inline bool lex_eq(const LexTuple& a, const LexTuple& b) {
  return lex_cmp(a, b) == Ord::equal;
}
inline bool lex_leq(const LexTuple& a, const LexTuple& b) {
  return lex_cmp(a, b) != Ord::greater;
}

// Sign of a tuple against zero: lex-positive means the first nonzero entry
// is positive. The zero tuple is neither positive nor negative.
bool lex_nonneg(const LexTuple& a);
bool lex_positive(const LexTuple& a);

LexTuple lex_min(const LexTuple& a, const LexTuple& b);

}  // namespace valkit
