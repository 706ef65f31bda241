// Copyright 2026 The ufh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "samplers.hpp"
#include "ufh/trees.hpp"

namespace ufh {
namespace {

TreeSpec two_branch_spec() {
  TreeSpec spec;
  spec.depths.push_back({{-1, 1}, {-1, -2}});
  spec.depths.push_back({{0, 2}, {1, 1}});
  return spec;
}

TEST(BuildTree, DepthOneIsASegment) {
  const auto t = build_tree(TreeSpec{}, 1, 5);
  EXPECT_EQ(t.num_vertices(), 11u);
  EXPECT_TRUE(t.is_tree());
  EXPECT_EQ(t.boundary_vertices().size(), 2u);
}

TEST(BuildTree, TwoSpineBranchesGiveTwoDegreeThreeVertices) {
  TreeSpec spec;
  spec.depths.push_back({{-1, 1}, {-1, -1}});
  const auto t = build_tree(spec, 2, 4);
  int deg3 = 0;
  for (std::size_t v = 0; v < t.num_vertices(); ++v) deg3 += t.degree(static_cast<VertexId>(v)) == 3;
  EXPECT_EQ(deg3, 2);
  EXPECT_TRUE(t.is_tree());
}

TEST(BuildTree, RandomSpecsAreTrivalentTrees) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto spec = sample::tree_spec(rng, 4, 5);
    const auto t = build_tree(spec, 4, 5);
    EXPECT_TRUE(t.is_tree());
    EXPECT_LE(t.max_degree(), 3);
    for (std::size_t v = 0; v < t.num_vertices(); ++v) {
      EXPECT_EQ(t.is_boundary(static_cast<VertexId>(v)), t.degree(static_cast<VertexId>(v)) == 1);
    }
  }
}

TEST(BuildTree, RejectsCollidingBranches) {
  TreeSpec spec;
  spec.depths.push_back({{-1, 2}, {-1, 2}});
  EXPECT_THROW(build_tree(spec, 2, 4), PreconditionError);
  TreeSpec origin;
  origin.depths.push_back({{-1, 0}});
  EXPECT_THROW(build_tree(origin, 2, 4), PreconditionError);
}

TEST(WellOrder, ChainsKeepTheirOrderAndAntichainsKeepInputOrder) {
  const int k = 5;
  std::vector<std::vector<bool>> chain(k, std::vector<bool>(k, false));
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) chain[p][q] = true;
  EXPECT_EQ(well_order(chain), (std::vector<int>{0, 1, 2, 3, 4}));
  std::vector<std::vector<bool>> anti(k, std::vector<bool>(k, false));
  EXPECT_EQ(well_order(anti), (std::vector<int>{0, 1, 2, 3, 4}));
  // Reversed chain.
  std::vector<std::vector<bool>> rev(k, std::vector<bool>(k, false));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < p; ++q) rev[p][q] = true;
  EXPECT_EQ(well_order(rev), (std::vector<int>{4, 3, 2, 1, 0}));
}

TEST(ConstructBips, DepthOneIsTheSpine) {
  const auto pb = construct_bips(TreeSpec{}, 1, 5);
  ASSERT_EQ(pb.bips.size(), 1u);
  EXPECT_EQ(pb.bips[0].edges.size(), pb.tree.num_edges());
}

TEST(ConstructBips, TwoSpineBranchesAddTwoBipsAboveTheSpine) {
  TreeSpec spec;
  spec.depths.push_back({{-1, 1}, {-1, -2}});
  const auto pb = construct_bips(spec, 2, 4);
  ASSERT_EQ(pb.bips.size(), 3u);
  EXPECT_EQ(pb.bips[0].depth, 1);
  for (int p : {1, 2}) {
    EXPECT_EQ(pb.bips[p].depth, 2);
    EXPECT_TRUE(pb.less[0][p]);
  }
  EXPECT_EQ(pb.order.front(), 0);
}

TEST(ConstructBips, StructuralInvariantsOnRandomSpecs) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto spec = sample::tree_spec(rng, 4, 6);
    const auto pb = construct_bips(spec, 4, 6);
    EXPECT_TRUE(check_tameness(pb).all());
    for (const auto& b : pb.bips) {
      EXPECT_TRUE(pb.tree.is_boundary(b.path.front()));
      EXPECT_TRUE(pb.tree.is_boundary(b.path.back()));
      EXPECT_EQ(b.edges.size() + 1, b.path.size());
    }
    // The well-order extends the partial order.
    for (std::size_t p = 0; p < pb.bips.size(); ++p)
      for (std::size_t q = 0; q < pb.bips.size(); ++q)
        if (pb.less[p][q]) {
          EXPECT_LT(pb.rank[p], pb.rank[q]);
        }
    // Every edge is covered by one to three bips.
    for (const auto& cov : pb.cover) {
      EXPECT_GE(cov.size(), 1u);
      EXPECT_LE(cov.size(), 3u);
    }
  }
}

TEST(TreeCoefficients, IndicatorAndZero) {
  const auto pb = construct_bips(two_branch_spec(), 3, 5);
  for (Ring ring : {Ring::kZ, Ring::kZ2}) {
    const auto zero = tree_coefficients(Chain(1, ring), pb);
    for (auto x : zero.f) EXPECT_EQ(x, 0);
    for (std::size_t p = 0; p < pb.bips.size(); ++p) {
      const auto tc = tree_coefficients(path_chain(pb.bips[p].path, ring), pb);
      for (std::size_t q = 0; q < pb.bips.size(); ++q) EXPECT_EQ(tc.f[q], p == q ? 1 : 0);
    }
  }
}

TEST(TreeCoefficients, RandomCyclesRoundTripWithinTwiceTheNorm) {
  std::mt19937_64 rng(21);
  for (int s = 0; s < 5; ++s) {
    const auto spec = sample::tree_spec(rng, 4, 6);
    const auto pb = construct_bips(spec, 4, 6);
    for (Ring ring : {Ring::kZ, Ring::kZ2}) {
      for (int i = 0; i < 30; ++i) {
        const Chain c = sample::tree_cycle(pb.tree, rng, ring, 3);
        const auto tc = tree_coefficients(c, pb);
        EXPECT_TRUE(tc.well_defined);
        EXPECT_EQ(bips_to_cycle(tc.f, pb, ring), c);
        std::int64_t fmax = 0;
        for (auto x : tc.f) fmax = std::max(fmax, std::abs(x));
        EXPECT_LE(fmax, 2 * sup_norm(c));
      }
    }
  }
}

TEST(BipsToCycle, LinearAndThreeCover) {
  const auto pb = construct_bips(two_branch_spec(), 3, 5);
  std::vector<std::int64_t> ones(pb.bips.size(), 1), neg(pb.bips.size(), -1);
  const Chain c = bips_to_cycle(ones, pb, Ring::kZ);
  EXPECT_LE(sup_norm(c), 3);
  EXPECT_TRUE(is_cycle(pb.tree, c));
  EXPECT_EQ(bips_to_cycle(neg, pb, Ring::kZ), -c);
}

TEST(TreeCoefficients, RejectsNonCycles) {
  const auto pb = construct_bips(TreeSpec{}, 1, 4);
  Chain c(1, Ring::kZ);
  c.add({pb.tree.edge(0).u, pb.tree.edge(0).v}, 1);
  EXPECT_THROW(tree_coefficients(c, pb), PreconditionError);
}

TEST(Comb, CoefficientsGrowAlongTheTeeth) {
  const auto g8 = comb_counterexample_check(8);
  EXPECT_TRUE(g8.strictly_increasing);
  EXPECT_TRUE(g8.tooth_consistent);
  ASSERT_EQ(g8.green.size() + g8.red.size(), 8u);
  for (const auto* seq : {&g8.green, &g8.red}) {
    for (std::size_t i = 1; i < seq->size(); ++i) EXPECT_LT((*seq)[i - 1], (*seq)[i]);
  }
  for (int k = 1; k <= 6; ++k) {
    EXPECT_GE(2 * comb_counterexample_check(2 * k).max_magnitude, k);
  }
  EXPECT_LE(comb_counterexample_check(2).max_magnitude, 2);
}

}  // namespace
}  // namespace ufh
