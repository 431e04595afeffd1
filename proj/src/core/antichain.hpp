#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace valkit {

// Exponent vector over some ordered index set. Plain signed entries; the
// series layer decides whether negatives are allowed (Laurent) or not.
using Expo = std::vector<std::int64_t>;

// a <= b in every coordinate. Lengths must match.
bool cw_leq(const Expo& a, const Expo& b);

// Minimal elements of a finite set under the componentwise order.
std::vector<Expo> min_cw(std::vector<Expo> elems);

// A finite set of pairwise componentwise-incomparable nonnegative exponent
// vectors over a named, ordered index set. This is the combinatorial shadow
// of a monomial series: the minimal exponents of its support. Construction
// validates the antichain property, so holding an Antichain is holding the
// proof.
class Antichain {
 public:
  // Validates: elements nonempty, entries >= 0, lengths match the index
  // set, pairwise incomparable. Throws Error{validation} otherwise.
  Antichain(std::vector<std::string> index_set, std::vector<Expo> elements);

  // Reduce an arbitrary nonempty set of nonnegative vectors to its minimal
  // elements first, then build.
  static Antichain reduce(std::vector<std::string> index_set,
                          std::vector<Expo> elements);

  const std::vector<std::string>& index_set() const { return index_; }
  const std::vector<Expo>& elements() const { return elems_; }
  std::size_t arity() const { return index_.size(); }

  bool operator==(const Antichain& o) const {
    return index_ == o.index_ && elems_ == o.elems_;
  }
  bool operator!=(const Antichain& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<std::string> index_;
  std::vector<Expo> elems_;  // sorted ascending, the canonical order
};

// Forget the coordinates outside `sub` (each name must occur in the source
// index set) and take minimal elements of the image. The result's index set
// is `sub` in the order given.
Antichain antichain_project(const Antichain& a,
                            const std::vector<std::string>& sub);

// Minimal elements of the Minkowski sum; this is the antichain of a product
// of two series with these supports.
Antichain antichain_sum(const Antichain& a, const Antichain& b);

// Minimal elements of the union; lower bound for the antichain of a sum of
// series (cancellation can only remove elements upward).
Antichain antichain_union_min(const Antichain& a, const Antichain& b);

// One antichain per face of a cone complex, keyed by face id.
struct AntichainFamily {
  std::map<std::string, Antichain> entries;
};

struct CoherenceViolation {
  std::string tau, sigma;  // face pair tau <= sigma, or missing face in tau
  std::string detail;
};

struct CoherenceReport {
  bool coherent = true;
  std::vector<CoherenceViolation> violations;
};

class ConeComplex;  // defined in complexes/complexes.hpp

// A family is coherent when for every face relation tau <= sigma the entry
// at tau equals the projection of the entry at sigma onto tau's rays. Also
// checks the family covers every face and index sets match ray sets.
CoherenceReport is_coherent(const AntichainFamily& fam, const ConeComplex& c);

}  // namespace valkit
