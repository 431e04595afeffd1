#include "valuation/retraction.hpp"

#include <algorithm>

namespace valkit {

WeightMatrix retract(const std::map<std::string, LexTuple>& values,
                     const ConeComplex& target) {
  if (target.components().empty())
    fail(ErrCode::validation, "cannot retract onto an empty complex");
  std::size_t k = 0;
  for (const auto& comp : target.components()) {
    auto it = values.find(comp);
    if (it == values.end())
      fail(ErrCode::validation,
           "no value given for component '" + comp + "'");
    if (k == 0)
      k = it->second.rank();
    else if (it->second.rank() != k)
      fail(ErrCode::dimension, "component values of unequal rank");
    if (!lex_nonneg(it->second))
      fail(ErrCode::domain, "value on component '" + comp +
                                "' is lex-negative; not a valuation value");
  }
  if (k == 0) fail(ErrCode::validation, "component values of rank zero");

  std::vector<std::string> support;
  for (const auto& comp : target.components())
    if (lex_positive(values.at(comp))) support.push_back(comp);

  std::vector<std::string> hits;
  for (const auto& [id, face] : target.faces())
    if (face.rays == support) hits.push_back(id);
  if (hits.empty())
    fail(ErrCode::no_face, "no face of the complex sits on components {" +
                               subset_key(support) +
                               "}; the value map does not retract");
  if (hits.size() > 1)
    fail(ErrCode::validation,
         "parallel faces on {" + subset_key(support) +
             "} make the retraction ambiguous on this complex");

  WeightMatrix w;
  w.face = hits.front();
  for (const auto& ray : target.face(w.face).rays)
    w.cols.push_back(values.at(ray));
  w.validate(target);
  return w;
}

namespace {

// dual basis rows of coarse facet cf, aligned with its rays
std::vector<Expo> chart_duals(const Fan& coarse, std::size_t cf) {
  return coarse.facet_dual(cf);
}

}  // namespace

WeightMatrix retract_toric(const WeightMatrix& fine,
                           const ConeComplex& fine_complex,
                           const ConeComplex& coarse) {
  fine.validate(fine_complex);
  if (!fine_complex.fan() || !coarse.fan())
    fail(ErrCode::domain, "toric retraction needs embedded fans");
  const Face& fine_face = fine_complex.face(fine.face);
  if (!fine_face.gens)
    fail(ErrCode::domain, "fine face has no ray vectors");
  const Fan& cfan = *coarse.fan();

  // first coarse maximal cone whose dual pairs nonnegatively with every
  // generator of the fine face
  std::size_t chart = cfan.facets.size();
  std::vector<Expo> duals;
  for (std::size_t f = 0; f < cfan.facets.size(); ++f) {
    auto d = chart_duals(cfan, f);
    bool contains = true;
    for (const auto& gen : *fine_face.gens) {
      for (const auto& m : d) {
        std::int64_t p = 0;
        for (std::size_t j = 0; j < gen.size(); ++j) p += m[j] * gen[j];
        if (p < 0) {
          contains = false;
          break;
        }
      }
      if (!contains) break;
    }
    if (contains) {
      chart = f;
      duals = std::move(d);
      break;
    }
  }
  if (chart == cfan.facets.size())
    fail(ErrCode::no_face,
         "the fine face is not contained in any maximal cone of the coarse "
         "fan; it does not refine it");

  std::size_t k = fine.rank();
  std::map<std::string, LexTuple> values;
  for (const auto& comp : coarse.components()) values[comp] = LexTuple::zero(k);
  for (std::size_t i = 0; i < duals.size(); ++i) {
    // value on the local equation of coarse ray i of the chart
    LexTuple v = LexTuple::zero(k);
    for (std::size_t j = 0; j < fine_face.gens->size(); ++j) {
      std::int64_t p = 0;
      const Expo& gen = (*fine_face.gens)[j];
      for (std::size_t t = 0; t < gen.size(); ++t) p += duals[i][t] * gen[t];
      if (p != 0) v += Rat(p) * fine.cols[j];
    }
    values[coarse.components()[static_cast<std::size_t>(
        cfan.facets[chart][i])]] = std::move(v);
  }
  return retract(values, coarse);
}

MonomialSeries pullback_to_face(const MonomialSeries& f,
                                const ConeComplex& fine,
                                const std::string& face_id) {
  if (!fine.fan())
    fail(ErrCode::domain, "pullback needs a complex with an embedded fan");
  const Face& face = fine.face(face_id);
  if (!face.gens) fail(ErrCode::domain, "face has no ray vectors");
  std::size_t d = static_cast<std::size_t>(fine.fan()->dim);
  if (f.arity() != d)
    fail(ErrCode::dimension,
         "series arity does not match the ambient dimension");
  if (f.laurent())
    fail(ErrCode::domain, "pullback expects a nonnegative polynomial");

  // exponents can go negative on charts of complete fans
  MonomialSeries out(face.rays, true);
  for (const auto& [e, c] : f.terms()) {
    Expo image(face.rays.size());
    for (std::size_t j = 0; j < face.rays.size(); ++j) {
      std::int64_t p = 0;
      const Expo& gen = (*face.gens)[j];
      for (std::size_t t = 0; t < d; ++t) p += e[t] * gen[t];
      image[j] = p;
    }
    out.add_term(image, c);
  }
  bool nonneg = true;
  for (const auto& [e, c] : out.terms())
    for (auto x : e) nonneg = nonneg && x >= 0;
  if (nonneg) {
    MonomialSeries plain(face.rays, false);
    for (const auto& [e, c] : out.terms()) plain.add_term(e, c);
    return plain;
  }
  return out;
}

}  // namespace valkit
