#include "valuation/valuation.hpp"

#include <algorithm>

namespace valkit {

namespace {

LexTuple weighted_sum(const std::vector<LexTuple>& cols, const Expo& e) {
  LexTuple acc = LexTuple::zero(cols.empty() ? 1 : cols[0].rank());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    acc += Rat(e[i]) * cols[i];
  }
  return acc;
}

LexTuple lex_min_over(const std::vector<LexTuple>& cols,
                      const std::vector<Expo>& exps) {
  LexTuple best = weighted_sum(cols, exps.front());
  for (std::size_t i = 1; i < exps.size(); ++i)
    best = lex_min(best, weighted_sum(cols, exps[i]));
  return best;
}

const Antichain& family_at(const AntichainFamily& fam,
                           const std::string& face_id) {
  auto it = fam.entries.find(face_id);
  if (it == fam.entries.end())
    fail(ErrCode::validation, "family has no entry for face " + face_id);
  return it->second;
}

}  // namespace

LexTuple qm_eval_series(const WeightMatrix& w, const ConeComplex& c,
                        const MonomialSeries& f) {
  w.validate(c);
  const Face& face = c.face(w.face);
  if (f.vars() != face.rays)
    fail(ErrCode::index_mismatch,
         "series variables do not match the rays of face " + w.face);
  if (f.is_zero())
    fail(ErrCode::domain,
         "the zero series has no finite value; use the quotient form");

  std::vector<Expo> support;
  support.reserve(f.terms().size());
  for (const auto& [e, coeff] : f.terms()) support.push_back(e);
  LexTuple value = lex_min_over(w.cols, support);

  // Admissible weights reach the minimum on a minimal exponent, so the
  // antichain view computes the same value. Cheap, so always on.
  if (w.admissible() && !f.laurent()) {
    assert(lex_eq(value, lex_min_over(w.cols, f.support_min().elements())));
  }
  return value;
}

std::optional<LexTuple> qm_eval_rational(const WeightMatrix& w,
                                         const ConeComplex& c,
                                         const RationalFunctionRep& f) {
  if (f.num.is_zero()) return std::nullopt;
  return qm_eval_series(w, c, f.num) - qm_eval_series(w, c, f.den);
}

TropicalFunction tropicalize(const MonomialSeries& f, const ConeComplex& c) {
  if (f.vars() != c.components())
    fail(ErrCode::index_mismatch,
         "series variables must be the components of the complex");
  Antichain full = f.support_min();
  TropicalFunction t;
  for (const auto& [id, face] : c.faces())
    t.pos.entries.emplace(id, antichain_project(full, face.rays));
  return t;
}

TropicalFunction tropicalize(const RationalFunctionRep& f,
                             const ConeComplex& c) {
  if (f.num.is_zero())
    fail(ErrCode::domain, "cannot tropicalize the zero function");
  TropicalFunction t = tropicalize(f.num, c);
  t.neg = tropicalize(f.den, c).pos;
  return t;
}

Rat trop_eval(const TropicalFunction& t, const ConeComplex& c,
              const std::string& face_id, const std::vector<Rat>& x) {
  const Face& face = c.face(face_id);
  if (x.size() != face.rays.size())
    fail(ErrCode::dimension, "point has wrong length for face " + face_id);
  for (const auto& xi : x)
    if (xi < 0)
      fail(ErrCode::domain, "point must lie in the face's cone (x >= 0)");

  auto piece_min = [&](const Antichain& a) {
    Rat best;
    bool first = true;
    for (const auto& e : a.elements()) {
      Rat s = 0;
      for (std::size_t i = 0; i < e.size(); ++i) s += Rat(e[i]) * x[i];
      if (first || s < best) {
        best = s;
        first = false;
      }
    }
    return best;
  };
  Rat v = piece_min(family_at(t.pos, face_id));
  if (t.neg) v -= piece_min(family_at(*t.neg, face_id));
  return v;
}

LexTuple directional_derivative(const TropicalFunction& t,
                                const ConeComplex& c, const TangentPoint& p) {
  if (!tangent_membership(p, c))
    fail(ErrCode::domain,
         "tangent point lies outside the iterated tangent cone of " + p.face);
  WeightMatrix w = duality_to_weights(p, c);
  auto piece = [&](const AntichainFamily& fam) {
    return lex_min_over(w.cols, family_at(fam, p.face).elements());
  };
  LexTuple v = piece(t.pos);
  if (t.neg) v -= piece(*t.neg);
  return v;
}

std::optional<LexTuple> analytic_eval(const TangentPoint& p,
                                      const ConeComplex& c,
                                      const RationalFunctionRep& f) {
  if (f.num.is_zero()) return std::nullopt;
  return directional_derivative(tropicalize(f, c), c, p);
}

LexTuple flag_eval(const FlagSpec& spec, const MonomialSeries& f) {
  if (f.is_zero()) fail(ErrCode::domain, "flag value of zero is infinite");
  if (f.laurent())
    fail(ErrCode::domain, "flag values need a nonnegative series");
  std::vector<std::string> vars = f.vars();
  {
    auto sorted_order = spec.order;
    auto sorted_vars = vars;
    std::sort(sorted_order.begin(), sorted_order.end());
    std::sort(sorted_vars.begin(), sorted_vars.end());
    if (sorted_order != sorted_vars)
      fail(ErrCode::index_mismatch,
           "flag order must be a permutation of the variables");
  }

  std::vector<Expo> support;
  for (const auto& [e, coeff] : f.terms()) support.push_back(e);
  LexTuple out;
  for (const auto& var : spec.order) {
    std::size_t pos = static_cast<std::size_t>(
        std::find(vars.begin(), vars.end(), var) - vars.begin());
    std::int64_t m = support.front()[pos];
    for (const auto& e : support) m = std::min(m, e[pos]);
    out.v.push_back(Rat(m));
    // keep the terms realizing the minimum, divide it out, drop the
    // variable; surviving exponents stay distinct because they all agreed
    // in the dropped coordinate
    std::vector<Expo> next;
    for (const auto& e : support) {
      if (e[pos] != m) continue;
      Expo reduced;
      reduced.reserve(e.size() - 1);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != pos) reduced.push_back(e[i]);
      next.push_back(std::move(reduced));
    }
    support = std::move(next);
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return out;
}

WeightMatrix flag_weights(const FlagSpec& spec, const ConeComplex& c) {
  std::string full = subset_key(c.components());
  const Face& face = c.face(full);
  WeightMatrix w;
  w.face = full;
  std::size_t k = spec.order.size();
  for (const auto& ray : face.rays) {
    auto it = std::find(spec.order.begin(), spec.order.end(), ray);
    if (it == spec.order.end())
      fail(ErrCode::index_mismatch,
           "flag order is missing component '" + ray + "'");
    LexTuple col = LexTuple::zero(k);
    col.v[static_cast<std::size_t>(it - spec.order.begin())] = 1;
    w.cols.push_back(std::move(col));
  }
  return w;
}

bool flag_matches_duality(const FlagSpec& spec, const MonomialSeries& f) {
  auto c = ConeComplex::orthant(f.vars());
  WeightMatrix w = flag_weights(spec, c);
  return lex_eq(flag_eval(spec, f), qm_eval_series(w, c, f));
}

}  // namespace valkit
