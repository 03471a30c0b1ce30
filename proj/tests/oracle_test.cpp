#include <algorithm>
#include <stdexcept>

#include <gtest/gtest.h>

#include "stgf/oracle.hpp"
#include "test_support.hpp"

namespace stgf {
namespace {

using oracle::Family;
using oracle::Parity;
using testing::Y;

oracle::SubtreeWitness witness_of(const Tree& t, std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  for (auto& w : oracle::enumerate_connected_subtrees(t)) {
    std::vector<std::string> got;
    for (VertexId v : w.vertices) got.push_back(t.label(v));
    std::sort(got.begin(), got.end());
    if (got == labels) return w;
  }
  throw std::logic_error("no such witness");
}

TEST(OracleTest, WitnessCounts) {
  EXPECT_EQ(oracle::enumerate_connected_subtrees(testing::path3()).size(), 6U);
  EXPECT_EQ(oracle::enumerate_connected_subtrees(testing::star3()).size(), 11U);
  EXPECT_EQ(oracle::enumerate_connected_subtrees(parse_edge_list("x")).size(), 1U);
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(oracle::enumerate_connected_subtrees(testing::path_of(n)).size(), n * (n + 1) / 2);
  }
}

TEST(OracleTest, WitnessShape) {
  const Tree t = testing::star3();
  const auto w = witness_of(t, {"c", "l1", "l2"});
  EXPECT_EQ(w.edges.size(), 2U);
  EXPECT_EQ(w.leaves.size(), 2U);
  EXPECT_EQ(w.max_degree(), 2);
  const auto single = witness_of(t, {"l3"});
  EXPECT_EQ(single.leaves, std::vector<VertexId>{t.id("l3")});
}

TEST(OracleTest, TooLarge) {
  EXPECT_THROW(oracle::oracle_count(testing::path_of(15), 2, Family::subtree), TooLarge);
  EXPECT_NO_THROW(oracle::oracle_count(testing::path_of(15), 2, Family::subtree, {}, 15));
}

TEST(OracleTest, OmegaK) {
  const Tree star = testing::star3();
  EXPECT_TRUE(oracle::omega_k(subtree_weights(star, 2), witness_of(star, {"c", "l1", "l2", "l3"}), 2).is_zero());
  const Tree p = testing::path3();
  EXPECT_EQ(oracle::omega_k(subtree_weights(p, 2), witness_of(p, {"a", "b", "c"}), 2), Y(3, 2));
  EXPECT_EQ(oracle::omega_k(subtree_weights(p, 1), witness_of(p, {"a", "b"}), 1), Y(2, 1));
}

TEST(OracleTest, OmegaBc) {
  const Tree p = testing::path3();
  EXPECT_EQ(oracle::omega_bc(bc_weights(p, 2), witness_of(p, {"a", "b", "c"}), 2), Y(2, 2));
  const Tree p4 = parse_edge_list("a b\nb c\nc d");
  EXPECT_TRUE(oracle::omega_bc(bc_weights(p4, 2), witness_of(p4, {"a", "b", "c", "d"}), 2).is_zero());
  EXPECT_FALSE(oracle::is_bc(p4, witness_of(p4, {"a", "b", "c", "d"})));
  const Tree star = testing::star3();
  EXPECT_EQ(oracle::omega_bc(bc_weights(star, 3), witness_of(star, {"c", "l1", "l2", "l3"}), 3), Y(3, 3));
}

TEST(OracleTest, OmegaRootedParity) {
  const Tree single = parse_edge_list("v");
  EXPECT_EQ(oracle::omega_rooted_parity(bc_weights(single, 2), witness_of(single, {"v"}), "v", 2, 0, Parity::even),
            BiPoly::y());
  const Tree edge = parse_edge_list("r u");
  EXPECT_EQ(oracle::omega_rooted_parity(bc_weights(edge, 2), witness_of(edge, {"r", "u"}), "r", 2, 1, Parity::odd),
            Y(1, 1));
  const Tree p = parse_edge_list("r b\nb c");
  EXPECT_EQ(oracle::omega_rooted_parity(bc_weights(p, 2), witness_of(p, {"r", "b", "c"}), "r", 2, 1, Parity::even),
            Y(2, 2));
  EXPECT_TRUE(
      oracle::omega_rooted_parity(bc_weights(p, 2), witness_of(p, {"r", "b", "c"}), "r", 2, 1, Parity::odd).is_zero());
  EXPECT_THROW(oracle::omega_rooted_parity(bc_weights(p, 2), witness_of(p, {"r"}), "q", 2, 0, Parity::odd),
               UnknownVertex);
}

TEST(OracleTest, OracleCountExamples) {
  EXPECT_EQ(oracle::oracle_count(testing::path3(), 2, Family::subtree), Y(1, 0, 3) + Y(2, 1, 2) + Y(3, 2));
  EXPECT_EQ(oracle::oracle_count(testing::path3(), 2, Family::bc), Y(2, 2));
  EXPECT_EQ(oracle::oracle_count(testing::star3(), 3, Family::bc, {"l1", "l2"}), Y(2, 2) + Y(3, 3));
  EXPECT_THROW(oracle::oracle_count(testing::path3(), 1, Family::bc), KTooSmall);
  EXPECT_THROW(oracle::oracle_count(testing::path3(), 2, Family::bc, {"a", "a"}), SameVertex);
}

TEST(OracleProperty, SaturatedEqualsUnconstrained) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Tree t = random_tree(1 + seed % 9, seed);
    const int k = static_cast<int>(t.size()) - 1;
    BiPoly unconstrained;
    for (const auto& w : oracle::enumerate_connected_subtrees(t)) {
      unconstrained += BiPoly::monomial(static_cast<std::uint32_t>(w.vertices.size()),
                                        static_cast<std::uint32_t>(w.edges.size()));
    }
    EXPECT_EQ(oracle::oracle_count(t, k, Family::subtree), unconstrained);
  }
}

TEST(OracleProperty, BcIffLeavesShareParityClass) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Tree t = random_tree(3 + seed % 7, seed);
    const int k = static_cast<int>(t.size()) - 1;
    const auto wt = bc_weights(t, std::max(k, 2));
    for (const auto& w : oracle::enumerate_connected_subtrees(t)) {
      if (w.edges.size() < 2) continue;
      const bool bc = oracle::is_bc(t, w);
      const BiPoly weight = oracle::omega_bc(wt, w, std::max(k, 2));
      EXPECT_EQ(bc, !weight.is_zero());
    }
  }
}

// With default weights the rooted odd/even weights reduce to indicator
// monomials; each rooted BC-shaped subtree (or single vertex) is counted by
// exactly one parity and j. Their total across parities then counts the
// subtrees containing the root whose leaves (other than the root) share a
// parity class relative to the root.
TEST(OracleProperty, RootedParityPartitionsRootedSubtrees) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Tree t = random_tree(2 + seed % 6, seed);
    const int k = std::max(2, static_cast<int>(t.size()) - 1);
    const auto wt = bc_weights(t, k, BiPoly::one(), BiPoly::one());
    for (VertexId r = 0; r < t.size(); ++r) {
      Coeff expected = 0;
      for (const auto& w : oracle::enumerate_connected_subtrees(t)) {
        if (!w.contains(r)) continue;
        const auto dist = oracle::witness_distances(t, w, r);
        bool all_odd = true, all_even = true;
        for (VertexId l : w.leaves) {
          if (l == r) continue;
          (dist[l] % 2 ? all_even : all_odd) = false;
        }
        if (w.vertices.size() == 1) {
          expected += 2;  // odd_0 = 1 and even_0 = 1 under unit weights
        } else {
          expected += (all_odd ? 1 : 0) + (all_even ? 1 : 0);
        }
      }
      const auto vec = oracle::oracle_rooted_parity(wt, k, t.label(r));
      Coeff got = 0;
      for (const auto& p : vec.odd) got += eval_counts(p);
      for (const auto& p : vec.even) got += eval_counts(p);
      EXPECT_EQ(got, expected);
    }
  }
}

}  // namespace
}  // namespace stgf
