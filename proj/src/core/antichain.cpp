#include "core/antichain.hpp"

#include <algorithm>
#include <sstream>

namespace valkit {

bool cw_leq(const Expo& a, const Expo& b) {
  if (a.size() != b.size())
    fail(ErrCode::dimension, "exponent vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Expo> min_cw(std::vector<Expo> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<Expo> out;
  for (const auto& e : elems) {
    bool dominated = false;
    for (const auto& m : out) {
      if (cw_leq(m, e)) {
        dominated = true;
        break;
      }
    }
    // sorted input means nothing later can dominate an accepted element
    if (!dominated) out.push_back(e);
  }
  return out;
}

Antichain::Antichain(std::vector<std::string> index_set,
                     std::vector<Expo> elements)
    : index_(std::move(index_set)), elems_(std::move(elements)) {
  if (elems_.empty())
    fail(ErrCode::validation, "empty antichain is not allowed");
  for (const auto& e : elems_) {
    if (e.size() != index_.size())
      fail(ErrCode::validation, "antichain element length " +
                                    std::to_string(e.size()) +
                                    " does not match index set size " +
                                    std::to_string(index_.size()));
    for (auto x : e)
      if (x < 0)
        fail(ErrCode::validation, "antichain elements must be nonnegative");
  }
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    for (std::size_t j = i + 1; j < elems_.size(); ++j) {
      if (cw_leq(elems_[i], elems_[j]) || cw_leq(elems_[j], elems_[i]))
        fail(ErrCode::validation, "elements are not pairwise incomparable");
    }
  }
}

Antichain Antichain::reduce(std::vector<std::string> index_set,
                            std::vector<Expo> elements) {
  return Antichain(std::move(index_set), min_cw(std::move(elements)));
}

std::string Antichain::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < elems_[i].size(); ++j) {
      if (j) os << ",";
      os << elems_[i][j];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

Antichain antichain_project(const Antichain& a,
                            const std::vector<std::string>& sub) {
  std::vector<std::size_t> pos;
  pos.reserve(sub.size());
  for (const auto& name : sub) {
    auto it = std::find(a.index_set().begin(), a.index_set().end(), name);
    if (it == a.index_set().end())
      fail(ErrCode::index_mismatch,
           "projection target '" + name + "' is not in the index set");
    pos.push_back(static_cast<std::size_t>(it - a.index_set().begin()));
  }
  std::vector<Expo> image;
  image.reserve(a.elements().size());
  for (const auto& e : a.elements()) {
    Expo p(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) p[i] = e[pos[i]];
    image.push_back(std::move(p));
  }
  return Antichain::reduce(sub, min_cw(std::move(image)));
}

namespace {
void check_same_index(const Antichain& a, const Antichain& b) {
  if (a.index_set() != b.index_set())
    fail(ErrCode::index_mismatch, "antichains over different index sets");
}
}  // namespace

Antichain antichain_sum(const Antichain& a, const Antichain& b) {
  check_same_index(a, b);
  std::vector<Expo> sums;
  sums.reserve(a.elements().size() * b.elements().size());
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) {
      Expo s(x.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
      sums.push_back(std::move(s));
    }
  }
  return Antichain::reduce(a.index_set(), min_cw(std::move(sums)));
}

Antichain antichain_union_min(const Antichain& a, const Antichain& b) {
  check_same_index(a, b);
  std::vector<Expo> all = a.elements();
  all.insert(all.end(), b.elements().begin(), b.elements().end());
  return Antichain::reduce(a.index_set(), min_cw(std::move(all)));
}

}  // namespace valkit
