#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/antichain.hpp"
#include "core/rational.hpp"

namespace valkit {

// A finitely supported formal sum of monomials z^e with rational
// coefficients over named variables. Exponents are nonnegative unless the
// series is flagged Laurent. The term map is ordered, so iteration order,
// serialization, and hence every downstream artifact are deterministic.
class MonomialSeries {
 public:
  MonomialSeries(std::vector<std::string> vars, bool laurent)
      : vars_(std::move(vars)), laurent_(laurent) {}

  static MonomialSeries zero(std::vector<std::string> vars,
                             bool laurent = false) {
    return MonomialSeries(std::move(vars), laurent);
  }
  static MonomialSeries one(std::vector<std::string> vars,
                            bool laurent = false);
  static MonomialSeries monomial(std::vector<std::string> vars, Expo e, Rat c,
                                 bool laurent = false);

  const std::vector<std::string>& vars() const { return vars_; }
  bool laurent() const { return laurent_; }
  const std::map<Expo, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t arity() const { return vars_.size(); }

  // Add c * z^e, dropping the term if the total cancels. Validates arity
  // and nonnegativity (unless Laurent).
  void add_term(const Expo& e, const Rat& c);
  Rat coeff(const Expo& e) const;

  MonomialSeries& operator+=(const MonomialSeries& o);
  MonomialSeries& operator-=(const MonomialSeries& o);
  friend MonomialSeries operator+(MonomialSeries a, const MonomialSeries& b) {
    return a += b;
  }
  friend MonomialSeries operator-(MonomialSeries a, const MonomialSeries& b) {
    return a -= b;
  }
  friend MonomialSeries operator*(const MonomialSeries& a,
                                  const MonomialSeries& b);
  friend MonomialSeries operator*(const Rat& c, MonomialSeries a);
  bool operator==(const MonomialSeries& o) const {
    return vars_ == o.vars_ && laurent_ == o.laurent_ && terms_ == o.terms_;
  }

  // Minimal exponents of the support; the combinatorial footprint of this
  // series. Errors on the zero series and on Laurent series (shift first).
  Antichain support_min() const;

  // Componentwise minimum gamma of the support and the nonnegative series
  // f / z^gamma with unit content: f = z^gamma * shifted. Errors on zero.
  std::pair<Expo, MonomialSeries> shift_factor() const;

  // Drop every term with an exponent outside [0, box] (componentwise).
  MonomialSeries truncate(const Expo& box) const;

  // Multiply, keeping only exponents within [0, box]. Both operands must be
  // nonnegative series; this is arithmetic in the truncated local ring.
  MonomialSeries mul_truncated(const MonomialSeries& o, const Expo& box) const;

  // Inverse of a unit (nonzero constant term, nonnegative exponents) up to
  // the box. Throws Error{not_a_unit} when the constant term vanishes: the
  // series is then not invertible in the local ring and callers rely on
  // this signal.
  MonomialSeries invert_unit(const Expo& box) const;

  // this / u in the truncated local ring; u must be a unit. Equivalent to
  // mul_truncated(u.invert_unit(box), box) but in one pass.
  MonomialSeries divide_unit_truncated(const MonomialSeries& u,
                                       const Expo& box) const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  bool laurent_ = false;
  std::map<Expo, Rat> terms_;

  void check_compatible(const MonomialSeries& o) const;
};

// Formal quotient of two series; the denominator is nonzero by
// construction.
struct RationalFunctionRep {
  MonomialSeries num;
  MonomialSeries den;

  RationalFunctionRep(MonomialSeries n, MonomialSeries d);
};

}  // namespace valkit
