#pragma once

// Labeled trees: construction and validation, edge-list I/O, uniform random
// generation via Prüfer decoding, and the structural queries the contraction
// algorithms rely on.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stgf/bipoly.hpp"
#include "stgf/errors.hpp"

namespace stgf {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId a;
  VertexId b;

  VertexId other(VertexId v) const { return v == a ? b : a; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

inline bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char ch) {
    return ch == '#' || std::isspace(static_cast<unsigned char>(ch));
  });
}

/// Connected acyclic undirected graph on uniquely labeled vertices.
class Tree {
 public:
  /// Throws NotATree unless the edges form a spanning tree on the labels.
  Tree(std::vector<std::string> labels, std::vector<Edge> edges)
      : labels_(std::move(labels)), edges_(std::move(edges)), adjacency_(labels_.size()) {
    if (labels_.empty()) throw NotATree("no vertices");
    for (VertexId v = 0; v < labels_.size(); ++v) {
      if (!valid_label(labels_[v])) throw ParseError("invalid vertex label '" + labels_[v] + "'");
      if (!index_.emplace(labels_[v], v).second) throw NotATree("duplicate vertex '" + labels_[v] + "'");
    }
    if (edges_.size() + 1 != labels_.size()) {
      throw NotATree(std::to_string(labels_.size()) + " vertices need " + std::to_string(labels_.size() - 1) +
                     " edges, got " + std::to_string(edges_.size()));
    }
    // Union-find catches cycles and duplicate edges; the edge count then
    // guarantees connectivity.
    std::vector<VertexId> parent(labels_.size());
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      const auto [a, b] = edges_[e];
      if (a >= labels_.size() || b >= labels_.size()) throw NotATree("edge endpoint out of range");
      if (a == b) throw NotATree("self-loop at '" + labels_[a] + "'");
      const VertexId ra = find(a), rb = find(b);
      if (ra == rb) throw NotATree("cycle or duplicate edge through '" + labels_[a] + "' - '" + labels_[b] + "'");
      parent[ra] = rb;
      adjacency_[a].push_back({b, e});
      adjacency_[b].push_back({a, e});
    }
  }

  /// Builds from label pairs, assigning vertex ids in first-appearance order.
  static Tree from_label_edges(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    auto intern = [&](const std::string& l) {
      auto [it, fresh] = ids.emplace(l, labels.size());
      if (fresh) labels.push_back(l);
      return it->second;
    };
    std::vector<Edge> edges;
    for (const auto& [a, b] : pairs) {
      const VertexId ia = intern(a);
      const VertexId ib = intern(b);
      edges.push_back({ia, ib});
    }
    return Tree(std::move(labels), std::move(edges));
  }

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  std::size_t max_degree() const {
    std::size_t m = 0;
    for (const auto& adj : adjacency_) m = std::max(m, adj.size());
    return m;
  }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId id(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw UnknownVertex(std::string(label));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::string, VertexId> index_;
};

// ---- edge-list text ---------------------------------------------------------

/// Newline-separated `u v` pairs; '#' comment lines and blank lines skipped;
/// a lone `u` declares a vertex (the one-vertex tree).
inline Tree parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& l) {
    if (!valid_label(l)) throw ParseError("invalid vertex label '" + l + "'");
    auto [it, fresh] = ids.emplace(l, labels.size());
    if (fresh) labels.push_back(l);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() > 2) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v' or 'u', got '" + line + "'");
    }
    const VertexId a = intern(tokens[0]);
    if (tokens.size() == 2) edges.push_back({a, intern(tokens[1])});
  }
  if (labels.empty()) throw ParseError("no vertices in input");
  return Tree(std::move(labels), std::move(edges));
}

/// Inverse of parse_edge_list (up to vertex order).
inline std::string render_edge_list(const Tree& t) {
  std::string out;
  if (t.edge_count() == 0) return t.label(0) + "\n";
  for (const auto& e : t.edges()) out += t.label(e.a) + " " + t.label(e.b) + "\n";
  return out;
}

// ---- random trees -----------------------------------------------------------

/// Decodes a Prüfer sequence over vertex ids 0..n-1 (labels v1..vn).
inline Tree prufer_decode(std::span<const VertexId> sequence, std::size_t n) {
  if (n < 1) throw NotATree("no vertices");
  if (n >= 2 && sequence.size() != n - 2) throw LengthMismatch("Prufer sequence of a tree on n vertices has n-2 entries");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i + 1);
  std::vector<Edge> edges;
  if (n == 1) return Tree(std::move(labels), {});
  std::vector<std::size_t> remaining(n, 1);
  for (VertexId s : sequence) {
    if (s >= n) throw LengthMismatch("Prufer entry out of range");
    ++remaining[s];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  for (VertexId s : sequence) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, s});
    if (--remaining[s] == 1) leaves.push(s);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Tree(std::move(labels), std::move(edges));
}

/// Unbiased draw in [0, bound) from a 64-bit Mersenne Twister by rejection.
/// Spelled out rather than using std::uniform_int_distribution, whose output
/// is implementation-defined.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform labeled tree on v1..vn: n-2 Prüfer entries drawn with
/// bounded_draw from std::mt19937_64 seeded with `seed`.
inline Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw NotATree("random tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> seq(n >= 2 ? n - 2 : 0);
  for (auto& s : seq) s = static_cast<VertexId>(bounded_draw(rng, n));
  return prufer_decode(seq, n);
}

// ---- structural queries -----------------------------------------------------

/// Degree-1 vertices in lexicographic label order.
inline std::vector<std::string> pendant_vertices(const Tree& t) {
  std::vector<std::string> out;
  for (VertexId v = 0; v < t.size(); ++v) {
    if (t.degree(v) == 1) out.push_back(t.label(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Vertex ids along the unique u-v path, endpoints included.
inline std::vector<VertexId> path_ids(const Tree& t, VertexId u, VertexId v) {
  std::vector<VertexId> prev(t.size(), t.size());
  std::vector<VertexId> queue{u};
  prev[u] = u;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    if (x == v) break;
    for (const auto& inc : t.neighbors(x)) {
      if (prev[inc.neighbor] == t.size()) {
        prev[inc.neighbor] = x;
        queue.push_back(inc.neighbor);
      }
    }
  }
  std::vector<VertexId> path;
  for (VertexId x = v; x != u; x = prev[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::vector<std::string> path_between(const Tree& t, std::string_view u, std::string_view v) {
  const VertexId iu = t.id(u);
  const VertexId iv = t.id(v);
  if (iu == iv) throw SameVertex(std::string(u));
  std::vector<std::string> out;
  for (VertexId x : path_ids(t, iu, iv)) out.push_back(t.label(x));
  return out;
}

// ---- weighted trees ---------------------------------------------------------

/// A tree whose vertices carry `Payload` weights and whose edges carry
/// polynomial weights (indexed by vertex id and edge id of `tree`).
template <class Payload>
struct WeightedTree {
  Tree tree;
  std::vector<Payload> vertex_weights;
  std::vector<BiPoly> edge_weights;

  WeightedTree(Tree t, std::vector<Payload> vw, std::vector<BiPoly> ew)
      : tree(std::move(t)), vertex_weights(std::move(vw)), edge_weights(std::move(ew)) {
    if (vertex_weights.size() != tree.size()) throw LengthMismatch("one weight per vertex required");
    if (edge_weights.size() != tree.edge_count()) throw LengthMismatch("one weight per edge required");
  }

  /// Every vertex gets `vertex_weight`, every edge gets `edge_weight`
  /// (the monomial z unless told otherwise).
  static WeightedTree uniform(Tree t, const Payload& vertex_weight, const BiPoly& edge_weight = BiPoly::z()) {
    std::vector<Payload> vw(t.size(), vertex_weight);
    std::vector<BiPoly> ew(t.edge_count(), edge_weight);
    return WeightedTree(std::move(t), std::move(vw), std::move(ew));
  }
};

/// Removes pendant vertex `u` and its edge; other weights are carried over
/// unchanged.
template <class Payload>
WeightedTree<Payload> remove_leaf(const WeightedTree<Payload>& wt, std::string_view u) {
  const Tree& t = wt.tree;
  const VertexId iu = t.id(u);
  if (t.degree(iu) != 1) throw NotPendant(std::string(u));
  const EdgeId gone = t.neighbors(iu)[0].edge;

  std::vector<std::string> labels;
  std::vector<Payload> vw;
  std::vector<VertexId> remap(t.size());
  for (VertexId v = 0; v < t.size(); ++v) {
    if (v == iu) continue;
    remap[v] = labels.size();
    labels.push_back(t.label(v));
    vw.push_back(wt.vertex_weights[v]);
  }
  std::vector<Edge> edges;
  std::vector<BiPoly> ew;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (e == gone) continue;
    edges.push_back({remap[t.edge(e).a], remap[t.edge(e).b]});
    ew.push_back(wt.edge_weights[e]);
  }
  return WeightedTree<Payload>(Tree(std::move(labels), std::move(edges)), std::move(vw), std::move(ew));
}

}  // namespace stgf
