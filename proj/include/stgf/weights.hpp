#pragma once

#include <string>
#include <vector>

#include "stgf/bipoly.hpp"
#include "stgf/tree.hpp"

namespace stgf {

/// (f_0, ..., f_k): entry i generates the rooted subtrees in which the root
/// has degree exactly i and no vertex exceeds degree k.
struct DegreeVector {
  std::vector<BiPoly> entries;

  /// (vertex, 0, ..., 0) of length k+1.
  static DegreeVector initial(int k, const BiPoly& vertex = BiPoly::y()) {
    if (k < 0) throw KTooSmall(k, 0);
    DegreeVector d{std::vector<BiPoly>(static_cast<std::size_t>(k) + 1)};
    d.entries[0] = vertex;
    return d;
  }

  int k() const { return static_cast<int>(entries.size()) - 1; }
  BiPoly sum(int lo, int hi) const { return range_sum(entries, lo, hi); }
  const BiPoly& operator[](std::size_t i) const { return entries[i]; }

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// Odd/even rooted vectors: odd[i] (even[i]) generates rooted subtrees whose
/// leaves all sit at odd (even) distance from the root, root degree exactly i.
struct ParityDegreeVector {
  std::vector<BiPoly> odd;
  std::vector<BiPoly> even;

  /// odd = (odd_root, 0, ..., 0), even = (vertex, 0, ..., 0).
  static ParityDegreeVector initial(int k, const BiPoly& vertex = BiPoly::y(),
                                    const BiPoly& odd_root = BiPoly::one()) {
    if (k < 0) throw KTooSmall(k, 0);
    const auto len = static_cast<std::size_t>(k) + 1;
    ParityDegreeVector p{std::vector<BiPoly>(len), std::vector<BiPoly>(len)};
    p.odd[0] = odd_root;
    p.even[0] = vertex;
    return p;
  }

  int k() const { return static_cast<int>(odd.size()) - 1; }

  friend bool operator==(const ParityDegreeVector&, const ParityDegreeVector&) = default;
};

inline std::string to_string(const DegreeVector& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    if (i) out += ", ";
    out += to_string(d.entries[i]);
  }
  return out + "]";
}

inline std::string to_string(const ParityDegreeVector& p) {
  return "odd=" + to_string(DegreeVector{p.odd}) + " even=" + to_string(DegreeVector{p.even});
}

/// Default subtree weighting: every vertex (y, 0, ..., 0), every edge z.
inline WeightedTree<DegreeVector> subtree_weights(const Tree& t, int k, const BiPoly& vertex = BiPoly::y(),
                                                  const BiPoly& edge = BiPoly::z()) {
  return WeightedTree<DegreeVector>::uniform(t, DegreeVector::initial(k, vertex), edge);
}

/// Default BC weighting: every vertex (1, 0, ..., 0; y, 0, ..., 0), every edge z.
inline WeightedTree<ParityDegreeVector> bc_weights(const Tree& t, int k, const BiPoly& vertex = BiPoly::y(),
                                                   const BiPoly& edge = BiPoly::z()) {
  return WeightedTree<ParityDegreeVector>::uniform(t, ParityDegreeVector::initial(k, vertex), edge);
}

}  // namespace stgf
