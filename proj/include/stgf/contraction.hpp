#pragma once

// Working state for repeated pendant-vertex elimination over a tree, or over
// one connected component (a vertex mask) of it.

#include <algorithm>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "stgf/tree.hpp"

namespace stgf {

/// Chooses the next pendant vertex to eliminate. Receives the eligible
/// candidates in lexicographic label order and returns an index into them.
/// An empty picker always takes the first candidate.
using PendantPicker = std::function<std::size_t(std::span<const VertexId>)>;

/// Ranks vertices by label so "lexicographic" is a cheap integer comparison.
inline std::vector<std::size_t> label_ranks(const Tree& t) {
  std::vector<VertexId> order(t.size());
  for (VertexId v = 0; v < t.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return t.label(a) < t.label(b); });
  std::vector<std::size_t> rank(t.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

class Contraction {
 public:
  /// `member` selects a connected vertex subset of `t`; empty means all.
  /// `keep` lists vertices that must never be eliminated.
  Contraction(const Tree& t, std::vector<bool> member, std::vector<VertexId> keep = {})
      : tree_(t), member_(std::move(member)), rank_(label_ranks(t)), by_rank_(t.size()), degree_(t.size(), 0),
        kept_(t.size(), false) {
    if (member_.empty()) member_.assign(t.size(), true);
    for (VertexId v : keep) kept_[v] = true;
    for (VertexId v = 0; v < t.size(); ++v) {
      by_rank_[rank_[v]] = v;
      if (!member_[v]) continue;
      ++alive_;
      for (const auto& inc : t.neighbors(v)) {
        if (member_[inc.neighbor]) ++degree_[v];
      }
    }
    for (VertexId v = 0; v < t.size(); ++v) refresh(v);
  }

  std::size_t alive_count() const { return alive_; }
  bool alive(VertexId v) const { return member_[v]; }
  bool has_candidate() const { return !candidates_.empty(); }

  /// Next pendant to eliminate, or throws if none is eligible.
  VertexId next(const PendantPicker& pick) const {
    if (!pick) return by_rank_[*candidates_.begin()];
    std::vector<VertexId> list;
    list.reserve(candidates_.size());
    for (std::size_t r : candidates_) list.push_back(by_rank_[r]);
    return list.at(pick(list));
  }

  /// The unique live neighbor of pendant `u` and the connecting edge.
  Incidence attachment(VertexId u) const {
    for (const auto& inc : tree_.neighbors(u)) {
      if (member_[inc.neighbor]) return inc;
    }
    throw NotPendant(tree_.label(u));
  }

  void remove(VertexId u) {
    const Incidence att = attachment(u);
    member_[u] = false;
    --alive_;
    degree_[u] = 0;
    --degree_[att.neighbor];
    refresh(u);
    refresh(att.neighbor);
  }

  /// The surviving vertices.
  std::vector<VertexId> survivors() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < tree_.size(); ++v) {
      if (member_[v]) out.push_back(v);
    }
    return out;
  }

 private:
  void refresh(VertexId v) {
    if (member_[v] && degree_[v] == 1 && !kept_[v]) {
      candidates_.insert(rank_[v]);
    } else {
      candidates_.erase(rank_[v]);
    }
  }

  const Tree& tree_;
  std::vector<bool> member_;
  std::vector<std::size_t> rank_;
  std::vector<VertexId> by_rank_;
  std::vector<std::size_t> degree_;
  std::vector<bool> kept_;
  std::set<std::size_t> candidates_;
  std::size_t alive_ = 0;
};

/// Vertices reachable from `start` inside `member` without crossing edge `cut`.
inline std::vector<bool> component_without(const Tree& t, const std::vector<bool>& member, VertexId start, EdgeId cut) {
  std::vector<bool> seen(t.size(), false);
  std::vector<VertexId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& inc : t.neighbors(x)) {
      if (inc.edge == cut || !member[inc.neighbor] || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      stack.push_back(inc.neighbor);
    }
  }
  return seen;
}

}  // namespace stgf
