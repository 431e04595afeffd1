#include "complexes/tangent.hpp"

#include <algorithm>

namespace valkit {

void WeightMatrix::validate(const ConeComplex& c) const {
  const Face& f = c.face(face);
  if (cols.size() != f.rays.size())
    fail(ErrCode::dimension, "weight matrix on " + face + " needs " +
                                 std::to_string(f.rays.size()) + " columns");
  std::size_t k = rank();
  if (k == 0) fail(ErrCode::validation, "weight matrix of rank zero");
  for (const auto& col : cols)
    if (col.rank() != k)
      fail(ErrCode::dimension, "weight matrix columns of unequal rank");
}

bool WeightMatrix::admissible() const {
  return std::all_of(cols.begin(), cols.end(),
                     [](const LexTuple& c) { return lex_nonneg(c); });
}

void TangentPoint::validate(const ConeComplex& c) const {
  const Face& f = c.face(face);
  if (x.size() != f.rays.size())
    fail(ErrCode::dimension, "tangent point on " + face + " needs " +
                                 std::to_string(f.rays.size()) +
                                 " base coordinates");
  for (const auto& row : w)
    if (row.size() != f.rays.size())
      fail(ErrCode::dimension, "tangent direction rows must match ray count");
}

LexTuple TangentPoint::column(std::size_t i) const {
  LexTuple col;
  col.v.reserve(order());
  col.v.push_back(x.at(i));
  for (const auto& row : w) col.v.push_back(row.at(i));
  return col;
}

bool tangent_membership(const TangentPoint& p, const ConeComplex& c) {
  p.validate(c);
  for (std::size_t i = 0; i < p.x.size(); ++i)
    if (!lex_nonneg(p.column(i))) return false;
  return true;
}

WeightMatrix duality_to_weights(const TangentPoint& p, const ConeComplex& c) {
  p.validate(c);
  WeightMatrix w;
  w.face = p.face;
  for (std::size_t i = 0; i < p.x.size(); ++i) w.cols.push_back(p.column(i));
  return w;
}

TangentPoint duality_to_tangent(const WeightMatrix& w, const ConeComplex& c) {
  w.validate(c);
  TangentPoint p;
  p.face = w.face;
  std::size_t k = w.rank();
  std::size_t m = w.cols.size();
  p.x.resize(m);
  p.w.assign(k - 1, std::vector<Rat>(m));
  for (std::size_t i = 0; i < m; ++i) {
    p.x[i] = w.cols[i].v[0];
    for (std::size_t j = 1; j < k; ++j) p.w[j - 1][i] = w.cols[i].v[j];
  }
  return p;
}

namespace {

// coordinate columns of the curve in the chart of fan facet f
std::vector<LexTuple> facet_coords(const Fan& fan, std::size_t f,
                                   const std::vector<Rat>& x,
                                   const std::vector<std::vector<Rat>>& w) {
  auto dual = fan.facet_dual(f);
  std::vector<LexTuple> cols(dual.size());
  for (std::size_t i = 0; i < dual.size(); ++i) {
    LexTuple& col = cols[i];
    col.v.reserve(1 + w.size());
    auto pair_with = [&](const std::vector<Rat>& vec) {
      Rat s = 0;
      for (int j = 0; j < fan.dim; ++j) s += Rat(dual[i][j]) * vec[j];
      return s;
    };
    col.v.push_back(pair_with(x));
    for (const auto& row : w) col.v.push_back(pair_with(row));
  }
  return cols;
}

bool is_zero_tuple(const LexTuple& t) {
  return std::all_of(t.v.begin(), t.v.end(),
                     [](const Rat& r) { return r == 0; });
}

void check_curve_shape(const ConeComplex& subdivision,
                       const std::vector<Rat>& x,
                       const std::vector<std::vector<Rat>>& w) {
  if (!subdivision.fan())
    fail(ErrCode::domain, "supporting-cone search needs an embedded fan");
  std::size_t d = static_cast<std::size_t>(subdivision.fan()->dim);
  if (x.size() != d)
    fail(ErrCode::dimension, "curve base point has wrong dimension");
  for (const auto& row : w)
    if (row.size() != d)
      fail(ErrCode::dimension, "curve direction row has wrong dimension");
}

}  // namespace

SupportingCone find_supporting_cone(const ConeComplex& subdivision,
                                    const std::vector<Rat>& x,
                                    const std::vector<std::vector<Rat>>& w) {
  check_curve_shape(subdivision, x, w);
  const Fan& fan = *subdivision.fan();

  bool found = false;
  SupportingCone result;
  for (std::size_t f = 0; f < fan.facets.size(); ++f) {
    auto cols = facet_coords(fan, f, x, w);
    bool supports = std::all_of(cols.begin(), cols.end(), lex_nonneg);
    if (!supports) continue;
    std::vector<std::string> rays;
    std::vector<LexTuple> coords;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (is_zero_tuple(cols[i])) continue;
      rays.push_back(Fan::ray_id(fan.facets[f][i]));
      coords.push_back(cols[i]);
    }
    std::string id = rays.empty() ? "O" : subset_key(rays);
    if (found) {
      // every supporting chart must agree on the minimal face
      if (id != result.face)
        fail(ErrCode::internal,
             "supporting charts disagree on the minimal face (" + id +
                 " vs " + result.face + ")");
      continue;
    }
    found = true;
    result.face = id;
    result.coords = std::move(coords);
  }
  if (!found)
    fail(ErrCode::domain, "the curve leaves the support of the subdivision");
  if (!subdivision.has_face(result.face))
    fail(ErrCode::internal, "minimal face is missing from the complex");
  return result;
}

bool sigma_open_contains(
    const ConeComplex& subdivision,
    const std::map<std::string, std::vector<CoordBox>>& opens,
    const std::vector<Rat>& x, const std::vector<std::vector<Rat>>& w) {
  check_curve_shape(subdivision, x, w);
  const Fan& fan = *subdivision.fan();
  std::size_t k = 1 + w.size();

  for (const auto& [face_id, boxes] : opens) {
    const Face& f = subdivision.face(face_id);
    std::size_t m = f.rays.size();
    for (const auto& box : boxes) {
      if (box.lo.size() != m * k || box.hi.size() != m * k)
        fail(ErrCode::validation, "box on face " + face_id + " needs " +
                                      std::to_string(m * k) + " coordinates");
      for (std::size_t i = 0; i < box.lo.size(); ++i)
        if (!(box.lo[i] < box.hi[i]))
          fail(ErrCode::validation,
               "box on face " + face_id + " has an empty side");
    }

    // chart of any maximal cone containing the face
    std::size_t host = fan.facets.size();
    for (std::size_t g = 0; g < fan.facets.size(); ++g) {
      std::vector<std::string> names;
      for (int r : fan.facets[g]) names.push_back(Fan::ray_id(r));
      bool contains = std::all_of(
          f.rays.begin(), f.rays.end(), [&](const std::string& ray) {
            return std::find(names.begin(), names.end(), ray) != names.end();
          });
      if (contains) {
        host = g;
        break;
      }
    }
    if (host == fan.facets.size())
      fail(ErrCode::internal, "face without an enclosing maximal cone");

    auto cols = facet_coords(fan, host, x, w);
    bool in_cone = true;
    std::vector<LexTuple> on_face;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::string ray = Fan::ray_id(fan.facets[host][i]);
      bool member =
          std::find(f.rays.begin(), f.rays.end(), ray) != f.rays.end();
      if (member) {
        if (!lex_nonneg(cols[i])) in_cone = false;
        on_face.push_back(cols[i]);
      } else if (!is_zero_tuple(cols[i])) {
        in_cone = false;
      }
      if (!in_cone) break;
    }
    if (!in_cone) continue;

    // stacked coordinates: x over the face's rays, then each higher row
    std::vector<Rat> stacked(m * k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < m; ++i) stacked[j * m + i] = on_face[i].v[j];
    for (const auto& box : boxes) {
      bool inside = true;
      for (std::size_t i = 0; i < stacked.size() && inside; ++i)
        inside = box.lo[i] < stacked[i] && stacked[i] < box.hi[i];
      if (inside) return true;
    }
  }
  return false;
}

}  // namespace valkit
