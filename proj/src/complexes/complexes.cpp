#include "complexes/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace valkit {

namespace {

const char* kOrigin = "O";

bool is_primitive(const Expo& v) {
  std::uint64_t g = 0;
  for (auto x : v) g = std::gcd(g, static_cast<std::uint64_t>(x < 0 ? -x : x));
  return g == 1;
}

void check_name(const std::string& s, const char* what) {
  if (s.empty()) fail(ErrCode::validation, std::string(what) + " is empty");
  if (s.find('+') != std::string::npos || s.find('|') != std::string::npos)
    fail(ErrCode::validation,
         std::string(what) + " '" + s + "' may not contain '+' or '|'");
}

std::string join_plus(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += parts[i];
  }
  return out;
}

std::string face_id_for(const std::vector<std::string>& rays) {
  return rays.empty() ? kOrigin : join_plus(rays);
}

// subsets of `rays` preserving order, by increasing bitmask
std::vector<std::vector<std::string>> all_subsets(
    const std::vector<std::string>& rays) {
  std::size_t n = rays.size();
  std::vector<std::vector<std::string>> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(rays[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string subset_key(const std::vector<std::string>& subset) {
  return join_plus(subset);
}

void Fan::validate(FanSupport support) const {
  if (dim < 1 || dim > 4)
    fail(ErrCode::validation, "fan dimension must be between 1 and 4");
  if (rays.empty()) fail(ErrCode::validation, "fan has no rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (static_cast<int>(rays[i].size()) != dim)
      fail(ErrCode::validation, "ray " + std::to_string(i) +
                                    " does not have " + std::to_string(dim) +
                                    " coordinates");
    if (!is_primitive(rays[i]))
      fail(ErrCode::validation,
           "ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays[i] == rays[j])
        fail(ErrCode::validation, "duplicate ray " + std::to_string(i));
    if (support == FanSupport::orthant)
      for (auto x : rays[i])
        if (x < 0)
          fail(ErrCode::validation,
               "ray " + std::to_string(i) +
                   " leaves the positive orthant declared as the support");
  }
  if (facets.empty()) fail(ErrCode::validation, "fan has no maximal cones");
  std::vector<bool> used(rays.size(), false);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto& fc = facets[f];
    if (static_cast<int>(fc.size()) != dim)
      fail(ErrCode::validation,
           "maximal cone " + std::to_string(f) + " is not simplicial of full "
           "dimension");
    if (!std::is_sorted(fc.begin(), fc.end()) ||
        std::adjacent_find(fc.begin(), fc.end()) != fc.end())
      fail(ErrCode::validation, "maximal cone " + std::to_string(f) +
                                    " must list distinct sorted ray indices");
    for (int r : fc) {
      if (r < 0 || r >= static_cast<int>(rays.size()))
        fail(ErrCode::validation,
             "maximal cone " + std::to_string(f) + " has a bad ray index");
      used[r] = true;
    }
    for (std::size_t g = 0; g < f; ++g)
      if (facets[g] == fc)
        fail(ErrCode::validation,
             "duplicate maximal cone " + std::to_string(f));
    MatQ m(dim, dim);
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r) m.at(r, c) = rays[fc[c]][r];
    Rat d = det(m);
    if (d != 1 && d != -1)
      fail(ErrCode::validation, "maximal cone " + std::to_string(f) +
                                    " is not unimodular (|det| = " +
                                    rat_str(d < 0 ? Rat(-d) : d) + ")");
  }
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (!used[r])
      fail(ErrCode::validation,
           "ray " + std::to_string(r) + " is not used by any maximal cone");

  if (dim == 1) {
    // support is all of R (complete) or [0, inf) (orthant)
    std::set<std::int64_t> vals;
    for (const auto& fc : facets) vals.insert(rays[fc[0]][0]);
    if (support == FanSupport::complete) {
      if (vals != std::set<std::int64_t>{-1, 1})
        fail(ErrCode::validation, "a complete fan in dimension 1 consists of "
                                  "the two half-lines");
    } else if (vals != std::set<std::int64_t>{1}) {
      fail(ErrCode::validation,
           "an orthant fan in dimension 1 is the single half-line");
    }
    return;
  }

  // Wall condition: interior walls in exactly two maximal cones; boundary
  // walls (orthant support only) in exactly one and inside a coordinate
  // hyperplane. Then the dual graph must be connected. Together with the
  // per-cone checks this pins the support combinatorially.
  std::map<std::vector<int>, std::vector<std::size_t>> wall_of;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (int drop = 0; drop < dim; ++drop) {
      std::vector<int> w = facets[f];
      w.erase(w.begin() + drop);
      wall_of[w].push_back(f);
    }
  }
  for (const auto& [w, fs] : wall_of) {
    if (fs.size() > 2)
      fail(ErrCode::validation, "a wall lies in more than two maximal cones");
    if (fs.size() == 1) {
      if (support == FanSupport::complete)
        fail(ErrCode::validation,
             "fan is not complete: a wall lies in only one maximal cone");
      bool on_boundary = false;
      for (int j = 0; j < dim && !on_boundary; ++j) {
        bool all_zero = true;
        for (int r : w) all_zero = all_zero && rays[r][j] == 0;
        on_boundary = all_zero;
      }
      if (!on_boundary)
        fail(ErrCode::validation, "fan does not subdivide the orthant: an "
                                  "unmatched wall is not on the boundary");
    }
  }
  std::vector<std::size_t> stack{0};
  std::vector<bool> seen(facets.size(), false);
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t f = stack.back();
    stack.pop_back();
    for (int drop = 0; drop < dim; ++drop) {
      std::vector<int> w = facets[f];
      w.erase(w.begin() + drop);
      for (std::size_t g : wall_of[w]) {
        if (!seen[g]) {
          seen[g] = true;
          ++reached;
          stack.push_back(g);
        }
      }
    }
  }
  if (reached != facets.size())
    fail(ErrCode::validation, "the maximal cones do not form a connected "
                              "subdivision");

  // No ray may sit strictly inside another maximal cone.
  for (std::size_t f = 0; f < facets.size(); ++f) {
    auto dual = facet_dual(f);
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (std::find(facets[f].begin(), facets[f].end(), static_cast<int>(r)) !=
          facets[f].end())
        continue;
      bool interior = true;
      for (const auto& m : dual) {
        std::int64_t p = 0;
        for (int j = 0; j < dim; ++j) p += m[j] * rays[r][j];
        if (p <= 0) {
          interior = false;
          break;
        }
      }
      if (interior)
        fail(ErrCode::validation,
             "ray " + std::to_string(r) + " lies inside maximal cone " +
                 std::to_string(f) + "; the cones overlap");
    }
  }
}

std::vector<Expo> Fan::facet_dual(std::size_t f) const {
  const auto& fc = facets.at(f);
  MatQ m(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) m.at(r, c) = rays[fc[c]][r];
  auto inv = inverse(m);
  if (!inv)
    fail(ErrCode::internal, "singular maximal cone survived validation");
  std::vector<Expo> rows(dim, Expo(dim));
  for (int j = 0; j < dim; ++j) {
    for (int c = 0; c < dim; ++c) {
      const Rat& x = inv->at(j, c);
      if (denominator(x) != 1)
        fail(ErrCode::internal, "non-integer dual basis on a unimodular cone");
      rows[j][c] = checked_int64(numerator(x), "dual basis entry");
    }
  }
  return rows;
}

std::optional<std::size_t> Fan::facet_containing(
    const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != dim)
    fail(ErrCode::dimension, "point has wrong dimension for this fan");
  for (std::size_t f = 0; f < facets.size(); ++f) {
    auto dual = facet_dual(f);
    bool inside = true;
    for (const auto& m : dual) {
      Rat p = 0;
      for (int j = 0; j < dim; ++j) p += Rat(m[j]) * x[j];
      if (p < 0) {
        inside = false;
        break;
      }
    }
    if (inside) return f;
  }
  return std::nullopt;
}

bool Fan::has_ray(const Expo& v) const {
  return std::find(rays.begin(), rays.end(), v) != rays.end();
}

std::size_t ConeComplex::component_pos(const std::string& c) const {
  auto it = std::find(components_.begin(), components_.end(), c);
  if (it == components_.end())
    fail(ErrCode::index_mismatch, "unknown component '" + c + "'");
  return static_cast<std::size_t>(it - components_.begin());
}

std::vector<std::string> ConeComplex::sorted_rays(
    std::vector<std::string> rays) const {
  std::sort(rays.begin(), rays.end(),
            [&](const std::string& a, const std::string& b) {
              return component_pos(a) < component_pos(b);
            });
  return rays;
}

ConeComplex ConeComplex::from_fan(Fan fan, FanSupport support) {
  fan.validate(support);
  std::vector<std::string> names;
  names.reserve(fan.rays.size());
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    names.push_back(Fan::ray_id(static_cast<int>(i)));

  ConeComplex c;
  c.components_ = names;
  for (const auto& fc : fan.facets) {
    std::vector<std::string> rays;
    for (int r : fc) rays.push_back(names[r]);
    for (auto& subset : all_subsets(rays)) {
      std::string id = face_id_for(subset);
      if (c.faces_.count(id)) continue;
      Face face;
      face.id = id;
      face.rays = subset;
      for (auto& s : all_subsets(subset)) face.sub[s] = face_id_for(s);
      std::vector<Expo> gens;
      for (const auto& name : subset) {
        auto pos = std::find(names.begin(), names.end(), name) - names.begin();
        gens.push_back(fan.rays[static_cast<std::size_t>(pos)]);
      }
      face.gens = std::move(gens);
      c.faces_.emplace(id, std::move(face));
    }
  }
  c.fan_ = std::move(fan);
  c.support_ = support;
  c.check_axioms();
  return c;
}

ConeComplex ConeComplex::orthant(std::vector<std::string> components) {
  if (components.empty())
    fail(ErrCode::validation, "orthant complex needs at least one coordinate");
  Fan fan;
  fan.dim = static_cast<int>(components.size());
  for (int i = 0; i < fan.dim; ++i) {
    Expo e(fan.dim, 0);
    e[i] = 1;
    fan.rays.push_back(std::move(e));
  }
  std::vector<int> full(fan.dim);
  std::iota(full.begin(), full.end(), 0);
  fan.facets.push_back(full);
  fan.validate(FanSupport::orthant);

  ConeComplex c;
  c.components_ = components;
  for (auto& subset : all_subsets(components)) {
    Face face;
    face.id = face_id_for(subset);
    face.rays = subset;
    for (auto& s : all_subsets(subset)) face.sub[s] = face_id_for(s);
    std::vector<Expo> gens;
    for (const auto& name : subset) {
      Expo e(fan.dim, 0);
      e[std::find(components.begin(), components.end(), name) -
        components.begin()] = 1;
      gens.push_back(std::move(e));
    }
    face.gens = std::move(gens);
    c.faces_.emplace(face.id, std::move(face));
  }
  c.fan_ = std::move(fan);
  c.support_ = FanSupport::orthant;
  c.check_axioms();
  return c;
}

ConeComplex ConeComplex::dual_complex(std::vector<std::string> components,
                                      std::vector<Stratum> strata) {
  ConeComplex c;
  for (const auto& comp : components) check_name(comp, "component id");
  c.components_ = components;

  // origin and one ray per component are implicit
  Face origin;
  origin.id = kOrigin;
  origin.sub[{}] = kOrigin;
  c.faces_.emplace(origin.id, origin);
  for (const auto& comp : components) {
    Face ray;
    ray.id = comp;
    ray.rays = {comp};
    ray.sub[{}] = kOrigin;
    ray.sub[{comp}] = comp;
    if (c.faces_.count(ray.id))
      fail(ErrCode::validation, "duplicate component '" + comp + "'");
    c.faces_.emplace(ray.id, std::move(ray));
  }

  // faces grouped by ray set, for subface resolution
  std::map<std::vector<std::string>, std::vector<std::string>> by_rayset;
  by_rayset[{}] = {kOrigin};
  for (const auto& comp : components)
    by_rayset[{comp}] = {comp};

  struct Pending {
    std::string id;
    std::map<std::string, std::string> choice;  // subset key -> label
  };
  std::vector<Pending> pending;
  std::map<std::string, std::string> label_of;  // face id -> label

  for (const auto& st : strata) {
    check_name(st.label, "stratum label");
    if (st.rays.size() < 2)
      fail(ErrCode::validation,
           "stratum '" + st.label + "' needs at least two components; single "
           "components are strata automatically");
    auto rays = c.sorted_rays(st.rays);
    if (std::adjacent_find(rays.begin(), rays.end()) != rays.end())
      fail(ErrCode::validation,
           "stratum '" + st.label + "' repeats a component");
    Face f;
    f.id = st.label + "|" + subset_key(rays);
    f.rays = rays;
    if (c.faces_.count(f.id))
      fail(ErrCode::validation, "two strata on the same components share the "
                                "label '" + st.label + "'");
    by_rayset[rays].push_back(f.id);
    label_of[f.id] = st.label;
    pending.push_back({f.id, st.faces});
    c.faces_.emplace(f.id, std::move(f));
  }

  // resolve every boundary subset of every declared stratum
  for (auto& p : pending) {
    Face& face = c.faces_.at(p.id);
    // validate the disambiguation entries themselves
    for (const auto& [key, label] : p.choice) {
      bool found_key = false;
      for (auto& subset : all_subsets(face.rays)) {
        if (subset.size() >= 2 && subset.size() < face.rays.size() &&
            subset_key(subset) == key) {
          found_key = true;
          break;
        }
      }
      if (!found_key)
        fail(ErrCode::validation, "face choice key '" + key + "' on stratum " +
                                      face.id +
                                      " is not a proper boundary subset");
      (void)label;
    }
    for (auto& subset : all_subsets(face.rays)) {
      if (subset.size() == face.rays.size()) {
        face.sub[subset] = face.id;
        continue;
      }
      if (subset.size() <= 1) {
        face.sub[subset] = face_id_for(subset);
        continue;
      }
      auto it = by_rayset.find(subset);
      if (it == by_rayset.end() || it->second.empty())
        fail(ErrCode::validation,
             "no stratum is declared on {" + subset_key(subset) +
                 "} although it bounds " + face.id);
      if (it->second.size() == 1) {
        face.sub[subset] = it->second[0];
        continue;
      }
      auto choice = p.choice.find(subset_key(subset));
      if (choice == p.choice.end()) {
        std::string opts;
        for (const auto& id : it->second) {
          if (!opts.empty()) opts += ", ";
          opts += label_of[id];
        }
        fail(ErrCode::validation,
             "parallel strata {" + opts + "} on {" + subset_key(subset) +
                 "}: stratum " + face.id + " must declare faces[\"" +
                 subset_key(subset) + "\"]");
      }
      std::string want = choice->second + "|" + subset_key(subset);
      if (std::find(it->second.begin(), it->second.end(), want) ==
          it->second.end())
        fail(ErrCode::validation, "faces[\"" + subset_key(subset) + "\"] on " +
                                      face.id + " names unknown stratum '" +
                                      choice->second + "'");
      face.sub[subset] = want;
    }
  }

  c.check_axioms();
  return c;
}

const Face& ConeComplex::face(const std::string& id) const {
  auto it = faces_.find(id);
  if (it == faces_.end())
    fail(ErrCode::no_face, "no face with id '" + id + "'");
  return it->second;
}

bool ConeComplex::has_face(const std::string& id) const {
  return faces_.count(id) != 0;
}

bool ConeComplex::is_subface(const std::string& tau,
                             const std::string& sigma) const {
  const Face& t = face(tau);
  const Face& s = face(sigma);
  if (tau == sigma) return true;
  auto it = s.sub.find(t.rays);
  return it != s.sub.end() && it->second == tau;
}

const std::string& ConeComplex::subface_of(
    const std::string& sigma, const std::vector<std::string>& subset) const {
  const Face& s = face(sigma);
  auto it = s.sub.find(subset);
  if (it == s.sub.end())
    fail(ErrCode::no_face, "face " + sigma + " has no boundary subset {" +
                               subset_key(subset) + "}");
  return it->second;
}

std::vector<std::pair<std::string, std::string>> ConeComplex::proper_pairs()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [id, f] : faces_) {
    for (const auto& [subset, sub_id] : f.sub) {
      if (sub_id != id) out.emplace_back(sub_id, id);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string ConeComplex::facet_face_id(std::size_t f) const {
  if (!fan_) fail(ErrCode::domain, "complex has no embedded fan");
  std::vector<std::string> rays;
  for (int r : fan_->facets.at(f)) rays.push_back(components_[r]);
  return face_id_for(rays);
}

void ConeComplex::check_axioms() const {
  for (const auto& comp : components_) check_name(comp, "component id");
  {
    std::set<std::string> seen(components_.begin(), components_.end());
    if (seen.size() != components_.size())
      fail(ErrCode::validation, "components are not distinct");
  }

  std::size_t origins = 0;
  for (const auto& [id, f] : faces_) {
    if (id != f.id) fail(ErrCode::internal, "face key/id mismatch");
    if (f.rays.empty()) ++origins;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
      component_pos(f.rays[i]);  // throws on unknown
      if (i && component_pos(f.rays[i - 1]) >= component_pos(f.rays[i]))
        fail(ErrCode::validation,
             "face " + id + " does not list rays in component order");
    }
    auto subsets = all_subsets(f.rays);
    if (f.sub.size() != subsets.size())
      fail(ErrCode::validation,
           "face " + id + " does not glue every boundary subset");
    for (auto& subset : subsets) {
      auto it = f.sub.find(subset);
      if (it == f.sub.end())
        fail(ErrCode::validation, "face " + id + " misses boundary subset {" +
                                      subset_key(subset) + "}");
      auto sub_face = faces_.find(it->second);
      if (sub_face == faces_.end())
        fail(ErrCode::validation, "face " + id + " glues {" +
                                      subset_key(subset) +
                                      "} to unknown face " + it->second);
      if (sub_face->second.rays != subset)
        fail(ErrCode::validation,
             "face " + id + " glues {" + subset_key(subset) +
                 "} to a face with different rays");
    }
    if (f.sub.at(f.rays) != id)
      fail(ErrCode::validation, "face " + id + " is not its own full face");
    // restriction of a restriction agrees with direct restriction
    for (auto& subset : subsets) {
      const Face& mid = faces_.at(f.sub.at(subset));
      for (auto& inner : all_subsets(subset)) {
        if (f.sub.at(inner) != mid.sub.at(inner))
          fail(ErrCode::validation,
               "face " + id + ": gluing of {" + subset_key(inner) +
                   "} disagrees through {" + subset_key(subset) + "}");
      }
    }
    if (f.gens) {
      if (f.gens->size() != f.rays.size())
        fail(ErrCode::validation,
             "face " + id + " has " + std::to_string(f.gens->size()) +
                 " generators for " + std::to_string(f.rays.size()) + " rays");
      for (const auto& g : *f.gens)
        if (!is_primitive(g))
          fail(ErrCode::validation,
               "face " + id + " has a non-primitive generator");
    }
  }
  if (origins != 1)
    fail(ErrCode::validation, "complex must have exactly one minimal face");
  for (const auto& [id, f] : faces_) {
    if (f.sub.at({}) == std::string(kOrigin)) continue;
    if (!faces_.at(f.sub.at({})).rays.empty())
      fail(ErrCode::validation, "empty boundary of " + id +
                                    " is not the minimal face");
  }
}

ConeComplex stellar_subdivide(const ConeComplex& c, const Expo& v) {
  if (!c.fan()) fail(ErrCode::domain, "complex has no embedded fan");
  const Fan& fan = *c.fan();
  // subdivision regenerates canonical ray names, so require them up front
  for (std::size_t i = 0; i < c.components().size(); ++i)
    if (c.components()[i] != Fan::ray_id(static_cast<int>(i)))
      fail(ErrCode::unsupported,
           "subdivision requires canonical ray names r0, r1, ...");
  if (static_cast<int>(v.size()) != fan.dim)
    fail(ErrCode::dimension, "new ray has wrong dimension");
  if (!is_primitive(v))
    fail(ErrCode::validation, "new ray must be a primitive vector");
  if (fan.has_ray(v)) return c;  // starring at an existing ray changes nothing

  std::vector<Rat> vq(v.begin(), v.end());
  auto host = fan.facet_containing(vq);
  if (!host)
    fail(ErrCode::domain, "new ray lies outside the support of the fan");

  // minimal cone containing v: rays of the host facet with positive
  // coordinate in its (unimodular, hence integral) basis
  auto dual = fan.facet_dual(*host);
  std::vector<int> core;
  for (int j = 0; j < fan.dim; ++j) {
    std::int64_t u = 0;
    for (int t = 0; t < fan.dim; ++t) u += dual[j][t] * v[t];
    if (u < 0) fail(ErrCode::internal, "containing facet lost the ray");
    if (u > 0) core.push_back(fan.facets[*host][j]);
  }
  if (core.empty()) fail(ErrCode::internal, "zero ray in subdivision");

  Fan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  out.rays.push_back(v);
  int vnew = static_cast<int>(out.rays.size()) - 1;
  for (const auto& fc : fan.facets) {
    bool contains_core = std::includes(fc.begin(), fc.end(), core.begin(),
                                       core.end());
    if (!contains_core) {
      out.facets.push_back(fc);
      continue;
    }
    for (int drop : core) {
      std::vector<int> nf;
      for (int r : fc)
        if (r != drop) nf.push_back(r);
      nf.push_back(vnew);
      std::sort(nf.begin(), nf.end());
      out.facets.push_back(std::move(nf));
    }
  }
  std::sort(out.facets.begin(), out.facets.end());

  for (const auto& fc : out.facets) {
    MatQ m(out.dim, out.dim);
    for (int col = 0; col < out.dim; ++col)
      for (int r = 0; r < out.dim; ++r) m.at(r, col) = out.rays[fc[col]][r];
    Rat d = det(m);
    if (d != 1 && d != -1)
      fail(ErrCode::validation,
           "subdivision at the given ray is not unimodular");
  }
  return ConeComplex::from_fan(std::move(out), c.fan_support());
}

CoherenceReport is_coherent(const AntichainFamily& fam, const ConeComplex& c) {
  CoherenceReport rep;
  auto flag = [&rep](std::string tau, std::string sigma, std::string detail) {
    rep.coherent = false;
    rep.violations.push_back(
        {std::move(tau), std::move(sigma), std::move(detail)});
  };

  for (const auto& [id, face] : c.faces()) {
    auto it = fam.entries.find(id);
    if (it == fam.entries.end()) {
      flag(id, id, "no antichain assigned to this face");
      continue;
    }
    if (it->second.index_set() != face.rays)
      flag(id, id,
           "index set " + subset_key(it->second.index_set()) +
               " does not match the face's rays " + subset_key(face.rays));
  }
  for (const auto& [id, _] : fam.entries)
    if (!c.has_face(id)) flag(id, id, "no face with this id in the complex");
  if (!rep.coherent) return rep;  // projections need matching shapes

  for (const auto& [tau, sigma] : c.proper_pairs()) {
    const Antichain& up = fam.entries.at(sigma);
    const Antichain& down = fam.entries.at(tau);
    Antichain proj = antichain_project(up, c.face(tau).rays);
    if (proj != down)
      flag(tau, sigma,
           "projection " + proj.str() + " != assigned " + down.str());
  }
  return rep;
}

}  // namespace valkit
