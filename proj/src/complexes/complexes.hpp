#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/antichain.hpp"
#include "core/matq.hpp"

namespace valkit {

// What an embedded fan is supposed to cover: all of R^dim, or the positive
// orthant (subdivisions of a single cone live there).
enum class FanSupport { complete, orthant };

// An embedded simplicial fan in Z^dim with unimodular maximal cones. This
// is the geometry the toric pipeline runs on; abstract cone complexes below
// only keep the face poset.
struct Fan {
  int dim = 0;
  std::vector<Expo> rays;                // primitive integer vectors
  std::vector<std::vector<int>> facets;  // sorted ray indices, dim each

  static std::string ray_id(int i) { return "r" + std::to_string(i); }

  // Throws Error{validation} unless: rays primitive and pairwise distinct,
  // every facet simplicial of full dimension with |det| = 1, the facet set
  // covers the declared support (interior walls lie in exactly two facets,
  // boundary walls only on the orthant boundary, dual graph connected; in
  // dimension 1 the half-lines are checked directly), and no ray of one
  // facet lies strictly inside another facet's cone.
  void validate(FanSupport support = FanSupport::complete) const;

  // Rows m_0..m_{dim-1} of the inverse of the ray matrix of facet f, so
  // <m_j, n_i> = delta_{ji} for the facet's rays n_i. Integer because the
  // facet is unimodular.
  std::vector<Expo> facet_dual(std::size_t f) const;

  // First facet whose cone contains x (all dual pairings >= 0).
  std::optional<std::size_t> facet_containing(const std::vector<Rat>& x) const;

  bool has_ray(const Expo& v) const;
};

// One face of a cone complex: an ordered index set of rays plus a total
// subface assignment. Faces with the same ray set may coexist (parallel
// faces); the sub map is what tells them apart.
struct Face {
  std::string id;
  std::vector<std::string> rays;  // ordered by global component order
  // every subset of `rays` (in that same order) -> id of the glued face
  std::map<std::vector<std::string>, std::string> sub;
  std::optional<std::vector<Expo>> gens;  // embedded: one primitive per ray
};

// Declared stratum of a dual complex: which components meet, the label of
// the connected component of the intersection, and (only when needed) a
// disambiguation map subset-key -> label picking which parallel face each
// boundary stratum attaches to.
struct Stratum {
  std::vector<std::string> rays;
  std::string label;
  std::map<std::string, std::string> faces;
};

std::string subset_key(const std::vector<std::string>& subset);

class ConeComplex {
 public:
  // All subsets of the facets of a validated fan; face ids are joined ray
  // ids ("r0+r2"), the origin is "O".
  static ConeComplex from_fan(Fan fan,
                              FanSupport support = FanSupport::complete);

  // The positive orthant on named coordinates: one face per subset,
  // standard basis generators.
  static ConeComplex orthant(std::vector<std::string> components);

  // Dual complex of a normal crossing configuration: one ray per component,
  // one face per declared stratum. Rays and the origin are implicit;
  // declared strata need at least two rays. Throws when a stratum's
  // boundary is missing or attaches ambiguously without a `faces` entry.
  static ConeComplex dual_complex(std::vector<std::string> components,
                                  std::vector<Stratum> strata);

  const Face& face(const std::string& id) const;
  bool has_face(const std::string& id) const;
  const std::map<std::string, Face>& faces() const { return faces_; }
  const std::vector<std::string>& components() const { return components_; }
  const std::optional<Fan>& fan() const { return fan_; }
  FanSupport fan_support() const { return support_; }

  // tau <= sigma in the face poset (reflexive).
  bool is_subface(const std::string& tau, const std::string& sigma) const;
  const std::string& subface_of(const std::string& sigma,
                                const std::vector<std::string>& subset) const;
  // all ordered pairs (tau, sigma) with tau a proper subface of sigma
  std::vector<std::pair<std::string, std::string>> proper_pairs() const;

  // id of the face carrying facet f of the embedded fan
  std::string facet_face_id(std::size_t f) const;

  // sort ray names by global component order
  std::vector<std::string> sorted_rays(std::vector<std::string> rays) const;

  // Structural axioms: distinct components, total and consistent sub maps
  // (restriction of a restriction agrees), unique minimal face, ray sets
  // matching sub keys, generator shapes. Throws Error{validation}.
  void check_axioms() const;

 private:
  std::vector<std::string> components_;
  std::map<std::string, Face> faces_;
  std::optional<Fan> fan_;
  FanSupport support_ = FanSupport::complete;

  std::size_t component_pos(const std::string& c) const;
};

// Refine the embedded fan of `c` by inserting the primitive ray v: every
// cone containing v in its relative interior is starred at v. Inserting an
// existing ray returns the complex unchanged. Throws when v is not
// primitive, lies outside the support, or the result is not unimodular.
ConeComplex stellar_subdivide(const ConeComplex& c, const Expo& v);

}  // namespace valkit
