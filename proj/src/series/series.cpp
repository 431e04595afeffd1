#include "series/series.hpp"

#include <algorithm>
#include <sstream>

namespace valkit {

namespace {

// graded order: total degree first, then lex; guarantees that e - g has
// been visited before e whenever g > 0 and both are nonnegative
bool graded_before(const Expo& a, const Expo& b) {
  std::int64_t sa = 0, sb = 0;
  for (auto x : a) sa += x;
  for (auto x : b) sb += x;
  if (sa != sb) return sa < sb;
  return a < b;
}

bool inside_box(const Expo& e, const Expo& box) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > box[i]) return false;
  return true;
}

void check_box(const Expo& box, std::size_t arity) {
  if (box.size() != arity)
    fail(ErrCode::dimension, "truncation box has wrong arity");
  for (auto b : box)
    if (b < 0) fail(ErrCode::domain, "truncation box must be nonnegative");
}

std::vector<Expo> box_points_graded(const Expo& box) {
  std::vector<Expo> pts;
  Expo cur(box.size(), 0);
  pts.push_back(cur);
  while (true) {
    bool advanced = false;
    std::size_t i = box.size();
    while (i > 0) {
      --i;
      if (cur[i] < box[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    pts.push_back(cur);
  }
  std::sort(pts.begin(), pts.end(), graded_before);
  return pts;
}

}  // namespace

MonomialSeries MonomialSeries::one(std::vector<std::string> vars,
                                   bool laurent) {
  MonomialSeries s(std::move(vars), laurent);
  s.add_term(Expo(s.arity(), 0), 1);
  return s;
}

MonomialSeries MonomialSeries::monomial(std::vector<std::string> vars, Expo e,
                                        Rat c, bool laurent) {
  MonomialSeries s(std::move(vars), laurent);
  s.add_term(e, c);
  return s;
}

void MonomialSeries::add_term(const Expo& e, const Rat& c) {
  if (e.size() != arity())
    fail(ErrCode::dimension, "exponent arity does not match variable count");
  if (!laurent_)
    for (auto x : e)
      if (x < 0)
        fail(ErrCode::domain,
             "negative exponent in a series not flagged Laurent");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MonomialSeries::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MonomialSeries::check_compatible(const MonomialSeries& o) const {
  if (vars_ != o.vars_)
    fail(ErrCode::index_mismatch, "series over different variables");
}

MonomialSeries& MonomialSeries::operator+=(const MonomialSeries& o) {
  check_compatible(o);
  laurent_ = laurent_ || o.laurent_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MonomialSeries& MonomialSeries::operator-=(const MonomialSeries& o) {
  check_compatible(o);
  laurent_ = laurent_ || o.laurent_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MonomialSeries operator*(const MonomialSeries& a, const MonomialSeries& b) {
  a.check_compatible(b);
  MonomialSeries out(a.vars_, a.laurent_ || b.laurent_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Expo e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MonomialSeries operator*(const Rat& c, MonomialSeries a) {
  if (c == 0) return MonomialSeries::zero(a.vars_, a.laurent_);
  for (auto& [e, coeff] : a.terms_) coeff *= c;
  return a;
}

Antichain MonomialSeries::support_min() const {
  if (is_zero())
    fail(ErrCode::domain, "the zero series has no minimal exponents");
  if (laurent_)
    fail(ErrCode::domain,
         "minimal exponents need a nonnegative series; factor the shift out "
         "first");
  std::vector<Expo> support;
  support.reserve(terms_.size());
  for (const auto& [e, c] : terms_) support.push_back(e);
  return Antichain::reduce(vars_, std::move(support));
}

std::pair<Expo, MonomialSeries> MonomialSeries::shift_factor() const {
  if (is_zero()) fail(ErrCode::domain, "cannot factor the zero series");
  Expo gamma = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < gamma.size(); ++i)
      gamma[i] = std::min(gamma[i], e[i]);
  MonomialSeries shifted(vars_, false);
  for (const auto& [e, c] : terms_) {
    Expo d(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) d[i] = e[i] - gamma[i];
    shifted.add_term(d, c);
  }
  return {gamma, shifted};
}

MonomialSeries MonomialSeries::truncate(const Expo& box) const {
  check_box(box, arity());
  MonomialSeries out(vars_, false);
  for (const auto& [e, c] : terms_)
    if (inside_box(e, box)) out.add_term(e, c);
  return out;
}

MonomialSeries MonomialSeries::mul_truncated(const MonomialSeries& o,
                                             const Expo& box) const {
  check_compatible(o);
  check_box(box, arity());
  if (laurent_ || o.laurent_)
    fail(ErrCode::domain, "truncated arithmetic needs nonnegative series");
  MonomialSeries out(vars_, false);
  for (const auto& [ea, ca] : terms_) {
    if (!inside_box(ea, box)) continue;
    for (const auto& [eb, cb] : o.terms_) {
      Expo e(ea.size());
      bool keep = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > box[i]) {
          keep = false;
          break;
        }
      }
      if (keep) out.add_term(e, ca * cb);
    }
  }
  return out;
}

MonomialSeries MonomialSeries::invert_unit(const Expo& box) const {
  return one(vars_).divide_unit_truncated(*this, box);
}

MonomialSeries MonomialSeries::divide_unit_truncated(const MonomialSeries& u,
                                                     const Expo& box) const {
  check_compatible(u);
  check_box(box, arity());
  if (laurent_ || u.laurent_)
    fail(ErrCode::domain, "truncated arithmetic needs nonnegative series");
  Expo zero_e(arity(), 0);
  Rat u0 = u.coeff(zero_e);
  if (u0 == 0)
    fail(ErrCode::not_a_unit,
         "series has zero constant term and is not invertible in the local "
         "ring");
  // g[e] = (f[e] - sum_{0 < g <= e} u[g] * out[e-g]) / u[0], filled in an
  // order where every e-g is already known
  MonomialSeries out(vars_, false);
  for (const auto& e : box_points_graded(box)) {
    Rat acc = coeff(e);
    for (const auto& [g, cu] : u.terms_) {
      if (g == zero_e || !inside_box(g, box)) continue;
      Expo rest(e.size());
      bool ok = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        rest[i] = e[i] - g[i];
        if (rest[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Rat prev = out.coeff(rest);
      if (prev != 0) acc -= cu * prev;
    }
    if (acc != 0) out.add_term(e, acc / u0);
  }
  return out;
}

std::string MonomialSeries::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

RationalFunctionRep::RationalFunctionRep(MonomialSeries n, MonomialSeries d)
    : num(std::move(n)), den(std::move(d)) {
  if (num.vars() != den.vars())
    fail(ErrCode::index_mismatch,
         "numerator and denominator over different variables");
  if (den.is_zero())
    fail(ErrCode::domain, "denominator must be a nonzero series");
}

}  // namespace valkit
