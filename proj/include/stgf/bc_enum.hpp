#pragma once

// Generating functions of BC-subtrees (every pair of leaves at even distance)
// with maximum degree <= k. Rooted odd/even parity vectors are obtained by
// pendant contraction; whole-tree and one-anchor counts split the tree at an
// edge and combine the rooted vectors of the two sides.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stgf/bipoly.hpp"
#include "stgf/contraction.hpp"
#include "stgf/tree.hpp"
#include "stgf/weights.hpp"

namespace stgf {

/// Chooses the split edge among the component's edges, given in
/// lexicographic order of their (smaller label, larger label) pairs.
/// An empty picker takes the first.
using EdgePicker = std::function<std::size_t(std::span<const EdgeId>)>;

namespace detail {

inline void require_length(const ParityDegreeVector& p, int k, const char* what) {
  if (p.k() != k || p.even.size() != p.odd.size()) {
    throw LengthMismatch(std::string(what) + " must hold two vectors of length " + std::to_string(k + 1));
  }
}

inline void require_bc_weights(const WeightedTree<ParityDegreeVector>& wt, int k) {
  if (k < 2) throw KTooSmall(k, 2);
  for (const auto& p : wt.vertex_weights) require_length(p, k, "vertex weight");
}

/// Sums used when the vertex joins across an edge (its degree rises by one).
inline BiPoly odd_join(const ParityDegreeVector& p, int k) { return range_sum(p.odd, 1, k - 1); }
inline BiPoly even_join(const ParityDegreeVector& p, int k) { return range_sum(p.even, 0, k - 1); }

/// Sums used for an interior path vertex (degree rises by two).
inline BiPoly odd_inner(const ParityDegreeVector& p, int k) { return range_sum(p.odd, 0, k - 2); }
inline BiPoly even_inner(const ParityDegreeVector& p, int k) { return range_sum(p.even, 0, k - 2); }

/// BC-subtrees that use edge (a, b), from the rooted vectors of both sides.
inline BiPoly cross_term(const ParityDegreeVector& side_a, const ParityDegreeVector& side_b, const BiPoly& edge_w,
                         int k) {
  return (odd_join(side_a, k) * even_join(side_b, k) + even_join(side_a, k) * odd_join(side_b, k)) * edge_w;
}

}  // namespace detail

/// Folds pendant `leaf` into `parent` for i = 1..k (pre-update reads):
///   odd'_i  = odd_i  + odd_{i-1}  * edge_w * (leaf.even_0 + ... + leaf.even_{k-1})
///   even'_i = even_i + even_{i-1} * edge_w * (leaf.odd_1  + ... + leaf.odd_{k-1})
inline ParityDegreeVector leaf_update_bc(const ParityDegreeVector& parent, const ParityDegreeVector& leaf,
                                         const BiPoly& edge_w, int k) {
  detail::require_length(parent, k, "parent vector");
  detail::require_length(leaf, k, "leaf vector");
  const BiPoly attach_odd = range_sum(leaf.even, 0, k - 1) * edge_w;
  const BiPoly attach_even = range_sum(leaf.odd, 1, k - 1) * edge_w;
  ParityDegreeVector out = parent;
  for (int i = 1; i <= k; ++i) {
    if (!attach_odd.is_zero()) out.odd[i] += parent.odd[i - 1] * attach_odd;
    if (!attach_even.is_zero()) out.even[i] += parent.even[i - 1] * attach_even;
  }
  return out;
}

namespace detail {

/// Rooted parity vectors of `root` within the component `member`.
inline ParityDegreeVector rooted_in(const WeightedTree<ParityDegreeVector>& wt, int k, const std::vector<bool>& member,
                                    VertexId root, const PendantPicker& pick = {}) {
  const Tree& t = wt.tree;
  Contraction state(t, member, {root});
  // Only vertices of the component are touched; copy lazily.
  std::vector<ParityDegreeVector> f(t.size());
  std::vector<bool> copied(t.size(), false);
  auto weight = [&](VertexId v) -> ParityDegreeVector& {
    if (!copied[v]) {
      f[v] = wt.vertex_weights[v];
      copied[v] = true;
    }
    return f[v];
  };
  while (state.has_candidate()) {
    const VertexId u = state.next(pick);
    const Incidence att = state.attachment(u);
    weight(att.neighbor) = leaf_update_bc(weight(att.neighbor), weight(u), wt.edge_weights[att.edge], k);
    state.remove(u);
  }
  return weight(root);
}

inline std::vector<EdgeId> component_edges(const Tree& t, const std::vector<bool>& member,
                                           const std::vector<std::size_t>& rank) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (member[t.edge(e).a] && member[t.edge(e).b]) out.push_back(e);
  }
  auto key = [&](EdgeId e) {
    const auto ra = rank[t.edge(e).a], rb = rank[t.edge(e).b];
    return std::pair(std::min(ra, rb), std::max(ra, rb));
  };
  std::sort(out.begin(), out.end(), [&](EdgeId x, EdgeId y) { return key(x) < key(y); });
  return out;
}

inline BiPoly bc_all_in(const WeightedTree<ParityDegreeVector>& wt, int k, const std::vector<bool>& member,
                        const std::vector<std::size_t>& rank, const EdgePicker& pick) {
  const Tree& t = wt.tree;
  const auto edges = component_edges(t, member, rank);
  if (edges.empty()) return {};
  const EdgeId e = pick ? edges.at(pick(edges)) : edges.front();
  const VertexId u = t.edge(e).a;
  const VertexId p = t.edge(e).b;
  const std::vector<bool> side_u = component_without(t, member, u, e);
  std::vector<bool> side_p(t.size(), false);
  for (VertexId v = 0; v < t.size(); ++v) side_p[v] = member[v] && !side_u[v];

  BiPoly total = cross_term(rooted_in(wt, k, side_p, p), rooted_in(wt, k, side_u, u), wt.edge_weights[e], k);
  total += bc_all_in(wt, k, side_u, rank, pick);
  total += bc_all_in(wt, k, side_p, rank, pick);
  return total;
}

}  // namespace detail

/// F_{<=k,o_j}(T; root) and F_{<=k,e_j}(T; root) for j = 0..k, as the odd
/// and even halves of the returned vector.
inline ParityDegreeVector rooted_parity_vectors(const WeightedTree<ParityDegreeVector>& wt, int k,
                                                std::string_view root, const PendantPicker& pick = {}) {
  detail::require_bc_weights(wt, k);
  return detail::rooted_in(wt, k, std::vector<bool>(wt.tree.size(), true), wt.tree.id(root), pick);
}

inline ParityDegreeVector rooted_parity_vectors(const Tree& t, int k, std::string_view root) {
  if (k < 2) throw KTooSmall(k, 2);
  return rooted_parity_vectors(bc_weights(t, k), k, root);
}

/// F_{BC<=k}(T): split at one edge, add the BC-subtrees through it, recurse
/// into both sides.
inline BiPoly count_bc_all(const WeightedTree<ParityDegreeVector>& wt, int k, const EdgePicker& pick = {}) {
  detail::require_bc_weights(wt, k);
  return detail::bc_all_in(wt, k, std::vector<bool>(wt.tree.size(), true), label_ranks(wt.tree), pick);
}

inline BiPoly count_bc_all(const Tree& t, int k) {
  if (k < 2) throw KTooSmall(k, 2);
  return count_bc_all(bc_weights(t, k), k);
}

/// F_{BC<=k}(T; v): peel the neighbors of v off one at a time (label order),
/// adding the BC-subtrees through each peeled edge, until v is isolated.
inline BiPoly count_bc_containing(const WeightedTree<ParityDegreeVector>& wt, int k, std::string_view v) {
  detail::require_bc_weights(wt, k);
  const Tree& t = wt.tree;
  const VertexId root = t.id(v);
  std::vector<Incidence> around(t.neighbors(root).begin(), t.neighbors(root).end());
  std::sort(around.begin(), around.end(),
            [&](const Incidence& a, const Incidence& b) { return t.label(a.neighbor) < t.label(b.neighbor); });
  std::vector<bool> member(t.size(), true);
  BiPoly total;
  for (const auto& inc : around) {
    const std::vector<bool> branch = component_without(t, member, inc.neighbor, inc.edge);
    for (VertexId x = 0; x < t.size(); ++x) {
      if (branch[x]) member[x] = false;
    }
    total += detail::cross_term(detail::rooted_in(wt, k, member, root), detail::rooted_in(wt, k, branch, inc.neighbor),
                                wt.edge_weights[inc.edge], k);
  }
  return total;
}

inline BiPoly count_bc_containing(const Tree& t, int k, std::string_view v) {
  if (k < 2) throw KTooSmall(k, 2);
  return count_bc_containing(bc_weights(t, k), k, v);
}

/// F_{BC<=k}(T; vi, vj): contract everything off the vi-vj path, then pair
/// endpoint and interior sums by distance parity along the path.
inline BiPoly count_bc_containing_pair(const WeightedTree<ParityDegreeVector>& wt, int k, std::string_view vi,
                                       std::string_view vj, const PendantPicker& pick = {}) {
  detail::require_bc_weights(wt, k);
  const Tree& t = wt.tree;
  const VertexId a = t.id(vi);
  const VertexId b = t.id(vj);
  if (a == b) throw SameVertex(std::string(vi));
  std::vector<ParityDegreeVector> f = wt.vertex_weights;
  Contraction state(t, {}, {a, b});
  while (state.has_candidate()) {
    const VertexId u = state.next(pick);
    const Incidence att = state.attachment(u);
    f[att.neighbor] = leaf_update_bc(f[att.neighbor], f[u], wt.edge_weights[att.edge], k);
    state.remove(u);
  }
  const auto path = path_ids(t, a, b);
  const std::size_t length = path.size() - 1;

  // Interior vertex i lies in a's distance class when i is even. In the first
  // term a's class holds no leaves (odd-rooted), in the second it does.
  BiPoly inner_first = BiPoly::one();
  BiPoly inner_second = BiPoly::one();
  for (std::size_t i = 1; i < length; ++i) {
    const bool same_class_as_a = i % 2 == 0;
    inner_first *= same_class_as_a ? detail::odd_inner(f[path[i]], k) : detail::even_inner(f[path[i]], k);
    inner_second *= same_class_as_a ? detail::even_inner(f[path[i]], k) : detail::odd_inner(f[path[i]], k);
  }
  const bool even_length = length % 2 == 0;
  BiPoly first = detail::odd_join(f[a], k) *
                 (even_length ? detail::odd_join(f[b], k) : detail::even_join(f[b], k)) * inner_first;
  BiPoly second = detail::even_join(f[a], k) *
                  (even_length ? detail::even_join(f[b], k) : detail::odd_join(f[b], k)) * inner_second;
  BiPoly result = first + second;
  for (std::size_t i = 0; i < length && !result.is_zero(); ++i) {
    for (const auto& inc : t.neighbors(path[i])) {
      if (inc.neighbor == path[i + 1]) result *= wt.edge_weights[inc.edge];
    }
  }
  return result;
}

inline BiPoly count_bc_containing_pair(const Tree& t, int k, std::string_view vi, std::string_view vj) {
  if (k < 2) throw KTooSmall(k, 2);
  return count_bc_containing_pair(bc_weights(t, k), k, vi, vj);
}

/// Dispatches on the number of anchors (0, 1 or 2) with default weights.
inline BiPoly count_bc(const Tree& t, int k, const std::vector<std::string>& anchors) {
  switch (anchors.size()) {
    case 0:
      return count_bc_all(t, k);
    case 1:
      return count_bc_containing(t, k, anchors[0]);
    case 2:
      return count_bc_containing_pair(t, k, anchors[0], anchors[1]);
    default:
      throw Error("at most two anchor vertices are supported");
  }
}

/// BC-subtrees whose maximum degree is exactly k: F_{BC<=k} - F_{BC<=k-1}.
inline BiPoly count_bc_exact_degree(const Tree& t, int k, const std::vector<std::string>& anchors = {}) {
  if (k < 3) throw KTooSmall(k, 3);
  return subtract_nonneg(count_bc(t, k, anchors), count_bc(t, k - 1, anchors));
}

}  // namespace stgf
