#pragma once

// Brute-force ground truth. Every connected vertex subset of a small tree is
// enumerated and weighted directly from the definitional subtree, rooted
// odd/even and BC-subtree weights. Nothing here shares code with the
// contraction algorithms.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stgf/bipoly.hpp"
#include "stgf/tree.hpp"
#include "stgf/weights.hpp"

namespace stgf::oracle {

inline constexpr std::size_t kDefaultBound = 14;

/// A connected vertex subset together with its induced edges and leaves.
struct SubtreeWitness {
  std::vector<VertexId> vertices;  // ascending ids
  std::vector<EdgeId> edges;
  std::vector<VertexId> leaves;  // a lone vertex is its own leaf
  std::vector<bool> member;      // indexed by tree vertex id
  std::vector<int> degree;       // induced degree, 0 outside

  bool contains(VertexId v) const { return member[v]; }
  bool is_leaf(VertexId v) const { return member[v] && (degree[v] == 1 || vertices.size() == 1); }
  int max_degree() const {
    int m = 0;
    for (VertexId v : vertices) m = std::max(m, degree[v]);
    return m;
  }
};

enum class Parity { odd, even };
enum class Family { subtree, bc };

/// Every non-empty connected vertex subset, once, in increasing bitmask order.
inline std::vector<SubtreeWitness> enumerate_connected_subtrees(const Tree& t, std::size_t bound = kDefaultBound) {
  const std::size_t n = t.size();
  if (n > bound || n > 30) throw TooLarge(n, bound);
  std::vector<SubtreeWitness> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> member(n);
    std::vector<VertexId> vertices;
    for (VertexId v = 0; v < n; ++v) {
      member[v] = (mask >> v) & 1U;
      if (member[v]) vertices.push_back(v);
    }
    std::vector<EdgeId> edges;
    std::vector<int> degree(n, 0);
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      if (member[t.edge(e).a] && member[t.edge(e).b]) {
        edges.push_back(e);
        ++degree[t.edge(e).a];
        ++degree[t.edge(e).b];
      }
    }
    // A vertex subset of a forest is connected iff it has |V| - 1 induced edges.
    if (edges.size() + 1 != vertices.size()) continue;
    std::vector<VertexId> leaves;
    for (VertexId v : vertices) {
      if (degree[v] == 1 || vertices.size() == 1) leaves.push_back(v);
    }
    out.push_back({std::move(vertices), std::move(edges), std::move(leaves), std::move(member), std::move(degree)});
  }
  return out;
}

/// Distances from `from` inside the witness.
inline std::vector<int> witness_distances(const Tree& t, const SubtreeWitness& w, VertexId from) {
  std::vector<int> dist(t.size(), -1);
  std::vector<VertexId> queue{from};
  dist[from] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (const auto& inc : t.neighbors(x)) {
      if (w.member[inc.neighbor] && dist[inc.neighbor] < 0) {
        dist[inc.neighbor] = dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

inline BiPoly edge_product(const SubtreeWitness& w, const std::vector<BiPoly>& edge_weights) {
  BiPoly g = BiPoly::one();
  for (EdgeId e : w.edges) g *= edge_weights[e];
  return g;
}

/// Sum of entries lo..hi; empty when hi < lo.
inline BiPoly span_sum(const std::vector<BiPoly>& f, int lo, int hi) {
  BiPoly s;
  for (int i = std::max(lo, 0); i <= hi && i < static_cast<int>(f.size()); ++i) s += f[static_cast<std::size_t>(i)];
  return s;
}

/// Max-k-degree subtree weight:
///   prod_v sum_{i=0}^{k-deg(v)} f(v)_i * prod_e g(e).
inline BiPoly omega_k(const WeightedTree<DegreeVector>& wt, const SubtreeWitness& w, int k) {
  BiPoly weight = edge_product(w, wt.edge_weights);
  for (VertexId v : w.vertices) {
    if (weight.is_zero()) break;
    weight *= span_sum(wt.vertex_weights[v].entries, 0, k - w.degree[v]);
  }
  return weight;
}

/// Rooted odd/even weight of degree class j (factors a1..a5 / a6..a10).
inline BiPoly omega_rooted_parity(const WeightedTree<ParityDegreeVector>& wt, const SubtreeWitness& w,
                                  std::string_view root, int k, int j, Parity parity) {
  const Tree& t = wt.tree;
  const VertexId r = t.id(root);
  if (!w.contains(r)) return {};
  const auto& fr = wt.vertex_weights[r];
  if (w.vertices.size() == 1) {
    const auto& vec = parity == Parity::odd ? fr.odd : fr.even;
    return j >= 0 && j < static_cast<int>(vec.size()) ? vec[static_cast<std::size_t>(j)] : BiPoly{};
  }
  const auto dist = witness_distances(t, w, r);
  const int root_index = j - w.degree[r];
  const auto& root_vec = parity == Parity::odd ? fr.odd : fr.even;
  if (root_index < 0 || root_index >= static_cast<int>(root_vec.size())) return {};
  BiPoly weight = edge_product(w, wt.edge_weights) * root_vec[static_cast<std::size_t>(root_index)];
  for (VertexId u : w.vertices) {
    if (u == r || weight.is_zero()) continue;
    const auto& fu = wt.vertex_weights[u];
    const int cap = k - w.degree[u];
    const bool odd_distance = dist[u] % 2 == 1;
    // In the odd family the odd-distance class is "even-weighted"; in the even
    // family the even-distance class is. Leaves of the other class need
    // degree index >= 1.
    const bool even_weighted = parity == Parity::odd ? odd_distance : !odd_distance;
    if (even_weighted) {
      weight *= span_sum(fu.even, 0, cap);
    } else if (w.is_leaf(u)) {
      weight *= span_sum(fu.odd, 1, cap);
    } else {
      weight *= span_sum(fu.odd, 0, cap);
    }
  }
  return weight;
}

/// Leaf-pair distances are all even.
inline bool is_bc(const Tree& t, const SubtreeWitness& w) {
  if (w.edges.size() < 2) return false;
  const auto dist = witness_distances(t, w, w.leaves.front());
  for (VertexId l : w.leaves) {
    if (dist[l] % 2 != 0) return false;
  }
  return true;
}

/// BC-subtree weight (b1 b2 b3 + b4 b5 b6) b7 with classes taken relative to
/// the witness's first leaf.
inline BiPoly omega_bc(const WeightedTree<ParityDegreeVector>& wt, const SubtreeWitness& w, int k) {
  const Tree& t = wt.tree;
  if (w.edges.size() < 2) return {};
  const auto dist = witness_distances(t, w, w.leaves.front());
  BiPoly b1 = BiPoly::one(), b2 = BiPoly::one(), b3 = BiPoly::one();
  BiPoly b4 = BiPoly::one(), b5 = BiPoly::one(), b6 = BiPoly::one();
  for (VertexId u : w.vertices) {
    const auto& fu = wt.vertex_weights[u];
    const int cap = k - w.degree[u];
    const bool leaf = w.is_leaf(u);
    if (dist[u] % 2 == 0) {
      b1 *= span_sum(fu.even, 0, cap);
      (leaf ? b4 : b5) *= span_sum(fu.odd, leaf ? 1 : 0, cap);
    } else {
      (leaf ? b2 : b3) *= span_sum(fu.odd, leaf ? 1 : 0, cap);
      b6 *= span_sum(fu.even, 0, cap);
    }
  }
  return (b1 * b2 * b3 + b4 * b5 * b6) * edge_product(w, wt.edge_weights);
}

namespace detail {

inline std::vector<VertexId> anchor_ids(const Tree& t, const std::vector<std::string>& anchors) {
  std::vector<VertexId> ids;
  for (const auto& a : anchors) ids.push_back(t.id(a));
  if (ids.size() > 2) throw Error("at most two anchor vertices are supported");
  if (ids.size() == 2 && ids[0] == ids[1]) throw SameVertex(anchors[0]);
  return ids;
}

inline bool holds_all(const SubtreeWitness& w, const std::vector<VertexId>& ids) {
  for (VertexId v : ids) {
    if (!w.contains(v)) return false;
  }
  return true;
}

}  // namespace detail

/// Sum of omega_k over subtrees of maximum degree <= k containing the anchors.
inline BiPoly oracle_subtree(const WeightedTree<DegreeVector>& wt, int k, const std::vector<std::string>& anchors = {},
                             std::size_t bound = kDefaultBound) {
  const auto ids = detail::anchor_ids(wt.tree, anchors);
  BiPoly total;
  for (const auto& w : enumerate_connected_subtrees(wt.tree, bound)) {
    if (w.max_degree() <= k && detail::holds_all(w, ids)) total += omega_k(wt, w, k);
  }
  return total;
}

/// Sum of omega_bc over BC-subtrees of maximum degree <= k containing the anchors.
inline BiPoly oracle_bc(const WeightedTree<ParityDegreeVector>& wt, int k, const std::vector<std::string>& anchors = {},
                        std::size_t bound = kDefaultBound) {
  if (k < 2) throw KTooSmall(k, 2);
  const auto ids = detail::anchor_ids(wt.tree, anchors);
  BiPoly total;
  for (const auto& w : enumerate_connected_subtrees(wt.tree, bound)) {
    if (w.max_degree() <= k && is_bc(wt.tree, w) && detail::holds_all(w, ids)) total += omega_bc(wt, w, k);
  }
  return total;
}

/// F_{<=k,o_j}(T; root), F_{<=k,e_j}(T; root) for all j by direct summation
/// over subtrees of maximum degree <= k containing the root.
inline ParityDegreeVector oracle_rooted_parity(const WeightedTree<ParityDegreeVector>& wt, int k, std::string_view root,
                                               std::size_t bound = kDefaultBound) {
  const VertexId r = wt.tree.id(root);
  const auto len = static_cast<std::size_t>(k) + 1;
  ParityDegreeVector out{std::vector<BiPoly>(len), std::vector<BiPoly>(len)};
  for (const auto& w : enumerate_connected_subtrees(wt.tree, bound)) {
    if (!w.contains(r) || w.max_degree() > k) continue;
    for (int j = 0; j <= k; ++j) {
      out.odd[static_cast<std::size_t>(j)] += omega_rooted_parity(wt, w, root, k, j, Parity::odd);
      out.even[static_cast<std::size_t>(j)] += omega_rooted_parity(wt, w, root, k, j, Parity::even);
    }
  }
  return out;
}

/// Default-weight oracle for either family with 0-2 anchors.
inline BiPoly oracle_count(const Tree& t, int k, Family family, const std::vector<std::string>& anchors = {},
                           std::size_t bound = kDefaultBound) {
  if (t.size() > bound) throw TooLarge(t.size(), bound);
  if (family == Family::subtree) {
    if (k < 0) throw KTooSmall(k, 0);
    return oracle_subtree(subtree_weights(t, k), k, anchors, bound);
  }
  if (k < 2) throw KTooSmall(k, 2);
  return oracle_bc(bc_weights(t, k), k, anchors, bound);
}

}  // namespace stgf::oracle
