#pragma once

// Generating functions of subtrees with maximum degree <= k, computed by
// folding pendant vertices into their neighbors one at a time.

#include <string>
#include <string_view>
#include <vector>

#include "stgf/bipoly.hpp"
#include "stgf/contraction.hpp"
#include "stgf/tree.hpp"
#include "stgf/weights.hpp"

namespace stgf {

namespace detail {

inline void require_length(const DegreeVector& d, int k, const char* what) {
  if (d.k() != k) {
    throw LengthMismatch(std::string(what) + " has length " + std::to_string(d.entries.size()) + ", expected " +
                         std::to_string(k + 1));
  }
}

inline void require_weights(const WeightedTree<DegreeVector>& wt, int k) {
  if (k < 0) throw KTooSmall(k, 0);
  for (const auto& d : wt.vertex_weights) require_length(d, k, "vertex weight");
}

}  // namespace detail

/// Folds pendant `leaf` (attached by an edge of weight `edge_w`) into
/// `parent`: parent'_i = parent_i + parent_{i-1} * edge_w * (leaf_0 + ... + leaf_{k-1})
/// for i >= 1, every read taken from the pre-update parent.
inline DegreeVector leaf_update_subtree(const DegreeVector& parent, const DegreeVector& leaf, const BiPoly& edge_w,
                                        int k) {
  detail::require_length(parent, k, "parent vector");
  detail::require_length(leaf, k, "leaf vector");
  const BiPoly attach = leaf.sum(0, k - 1) * edge_w;
  DegreeVector out = parent;
  if (attach.is_zero()) return out;
  for (int i = 1; i <= k; ++i) {
    out.entries[i] += parent.entries[i - 1] * attach;
  }
  return out;
}

/// F_{<=k}(T; f, g): sum over subtrees of maximum degree <= k.
inline BiPoly count_all(const WeightedTree<DegreeVector>& wt, int k, const PendantPicker& pick = {}) {
  detail::require_weights(wt, k);
  const Tree& t = wt.tree;
  std::vector<DegreeVector> f = wt.vertex_weights;
  Contraction state(t, {});
  BiPoly total;
  while (state.has_candidate()) {
    const VertexId u = state.next(pick);
    const Incidence att = state.attachment(u);
    total += f[u].sum(0, k);
    f[att.neighbor] = leaf_update_subtree(f[att.neighbor], f[u], wt.edge_weights[att.edge], k);
    state.remove(u);
  }
  total += f[state.survivors().front()].sum(0, k);
  return total;
}

inline BiPoly count_all(const Tree& t, int k) { return count_all(subtree_weights(t, k), k); }

/// F_{<=k}(T; f, g; v): subtrees of maximum degree <= k containing v.
inline BiPoly count_containing(const WeightedTree<DegreeVector>& wt, int k, std::string_view v,
                               const PendantPicker& pick = {}) {
  detail::require_weights(wt, k);
  const Tree& t = wt.tree;
  const VertexId root = t.id(v);
  std::vector<DegreeVector> f = wt.vertex_weights;
  Contraction state(t, {}, {root});
  while (state.has_candidate()) {
    const VertexId u = state.next(pick);
    const Incidence att = state.attachment(u);
    f[att.neighbor] = leaf_update_subtree(f[att.neighbor], f[u], wt.edge_weights[att.edge], k);
    state.remove(u);
  }
  return f[root].sum(0, k);
}

inline BiPoly count_containing(const Tree& t, int k, std::string_view v) {
  return count_containing(subtree_weights(t, k), k, v);
}

/// F_{<=k}(T; f, g; vi, vj). After contracting everything off the vi-vj
/// path, the result is the product of independent factors: endpoint sums to
/// k-1, interior sums to k-2, and the path edge weights. For k = 0 no
/// subtree holds two vertices and the empty sums give 0.
inline BiPoly count_containing_pair(const WeightedTree<DegreeVector>& wt, int k, std::string_view vi,
                                    std::string_view vj, const PendantPicker& pick = {}) {
  detail::require_weights(wt, k);
  const Tree& t = wt.tree;
  const VertexId a = t.id(vi);
  const VertexId b = t.id(vj);
  if (a == b) throw SameVertex(std::string(vi));
  std::vector<DegreeVector> f = wt.vertex_weights;
  Contraction state(t, {}, {a, b});
  while (state.has_candidate()) {
    const VertexId u = state.next(pick);
    const Incidence att = state.attachment(u);
    f[att.neighbor] = leaf_update_subtree(f[att.neighbor], f[u], wt.edge_weights[att.edge], k);
    state.remove(u);
  }
  const auto path = path_ids(t, a, b);
  BiPoly result = f[a].sum(0, k - 1) * f[b].sum(0, k - 1);
  for (std::size_t i = 1; i + 1 < path.size() && !result.is_zero(); ++i) {
    result *= f[path[i]].sum(0, k - 2);
  }
  for (std::size_t i = 0; i + 1 < path.size() && !result.is_zero(); ++i) {
    for (const auto& inc : t.neighbors(path[i])) {
      if (inc.neighbor == path[i + 1]) result *= wt.edge_weights[inc.edge];
    }
  }
  return result;
}

inline BiPoly count_containing_pair(const Tree& t, int k, std::string_view vi, std::string_view vj) {
  return count_containing_pair(subtree_weights(t, k), k, vi, vj);
}

/// Dispatches on the number of anchors (0, 1 or 2) with default weights.
inline BiPoly count_subtrees(const Tree& t, int k, const std::vector<std::string>& anchors) {
  switch (anchors.size()) {
    case 0:
      return count_all(t, k);
    case 1:
      return count_containing(t, k, anchors[0]);
    case 2:
      return count_containing_pair(t, k, anchors[0], anchors[1]);
    default:
      throw Error("at most two anchor vertices are supported");
  }
}

/// Subtrees whose maximum degree is exactly k: F_{<=k} - F_{<=k-1}.
inline BiPoly count_exact_degree(const Tree& t, int k, const std::vector<std::string>& anchors = {}) {
  if (k < 1) throw KTooSmall(k, 1);
  return subtract_nonneg(count_subtrees(t, k, anchors), count_subtrees(t, k - 1, anchors));
}

}  // namespace stgf
