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

#include "oracles.hpp"
#include "ufh/families.hpp"
#include "ufh/graph.hpp"

namespace ufh {
namespace {

TEST(Families, WindowSizes) {
  EXPECT_EQ(build_window(family::Grid2d{}, std::nullopt, 2).num_vertices(), 13u);
  const auto cyc = build_window(family::Cycle{6}, std::nullopt, 5);
  EXPECT_EQ(cyc.num_vertices(), 6u);
  EXPECT_EQ(cyc.num_edges(), 6u);
  EXPECT_TRUE(cyc.boundary_vertices().empty());
  const auto chain = build_window(family::GrowingCircuitChain{{4, 6, 8}}, std::nullopt, 40);
  EXPECT_EQ(chain.num_vertices(), 18u);
  EXPECT_EQ(chain.num_edges(), 20u);
}

TEST(Families, DegreesMatchTheFamily) {
  const auto grid = build_window(family::Grid2d{}, std::nullopt, 5);
  const auto tri = build_window(family::Grid2d{true}, std::nullopt, 5);
  const auto tree = build_window(family::CayleyFree{3}, std::nullopt, 5);
  for (const auto* w : {&grid, &tri, &tree}) {
    for (std::size_t v = 0; v < w->num_vertices(); ++v) {
      if (w->is_boundary(static_cast<VertexId>(v))) continue;
      EXPECT_EQ(static_cast<int>(w->degree(static_cast<VertexId>(v))), w->degree_bound());
    }
  }
  EXPECT_EQ(tri.degree_bound(), 6);
  EXPECT_TRUE(tree.is_tree());
  EXPECT_FALSE(grid.is_tree());
  // |S_k| = 3 * 2^(k-1) in the trivalent regular tree.
  EXPECT_EQ(tree.num_vertices(), 1u + 3 + 6 + 12 + 24 + 48);
}

TEST(Families, RejectsBadInput) {
  EXPECT_THROW(build_window(family::Grid2d{}, std::nullopt, -1), PreconditionError);
  EXPECT_THROW(build_window(family::GrowingCircuitChain{{4, 4}}, std::nullopt, 3), PreconditionError);
  EXPECT_THROW(build_window(family::GrowingCircuitChain{{5, 8}}, std::nullopt, 3), PreconditionError);
  EXPECT_THROW(build_window(family::Grid2d{}, VertexKey{1}, 3), PreconditionError);
}

TEST(Families, CenterIsVertexZeroAndBoundaryIsTheOuterSphere) {
  for (int r = 1; r <= 6; ++r) {
    const auto w = build_window(family::Grid2d{}, std::nullopt, r);
    EXPECT_EQ(w.center(), 0);
    const auto d = bfs_distances(w, 0);
    for (std::size_t v = 0; v < w.num_vertices(); ++v) {
      EXPECT_EQ(w.is_boundary(static_cast<VertexId>(v)), d[v] == r);
    }
  }
}

class GraphProperties : public ::testing::TestWithParam<FamilySpec> {};

TEST_P(GraphProperties, BfsMatchesFloydWarshall) {
  const auto w = build_window(GetParam(), std::nullopt, 4);
  const auto d = oracle::all_distances(w);
  for (std::size_t s = 0; s < w.num_vertices(); s += 3) {
    const auto bfs = bfs_distances(w, static_cast<VertexId>(s));
    for (std::size_t v = 0; v < w.num_vertices(); ++v) {
      EXPECT_EQ(bfs[v] == kUnreachable ? oracle::kInf : bfs[v], d[s][v]);
    }
  }
}

TEST_P(GraphProperties, BoundaryDistanceMatchesOracle) {
  const auto w = build_window(GetParam(), std::nullopt, 4);
  const auto d = oracle::all_distances(w);
  for (std::size_t v = 0; v < w.num_vertices(); ++v) {
    int best = oracle::kInf;
    for (VertexId b : w.boundary_vertices()) best = std::min(best, d[v][b]);
    if (w.boundary_vertices().empty()) continue;
    EXPECT_EQ(w.boundary_distance(static_cast<VertexId>(v)), best);
  }
}

TEST_P(GraphProperties, ComponentsAndBoundariesMatchOracle) {
  const auto w = build_window(GetParam(), std::nullopt, 4);
  for (int k = 0; k < 3; ++k) {
    auto inside = membership_mask(w, ball(w, w.center(), k));
    std::vector<bool> outside(inside.size());
    for (std::size_t v = 0; v < inside.size(); ++v) outside[v] = !inside[v];
    int touching = 0;
    for (const auto& comp : components(w, outside)) {
      touching += std::any_of(comp.begin(), comp.end(), [&](VertexId v) { return w.is_boundary(v); });
    }
    EXPECT_EQ(touching, oracle::boundary_components(w, outside));
    std::size_t cut = 0;
    for (const auto& e : w.edges()) cut += inside[e.u] != inside[e.v];
    EXPECT_EQ(edge_boundary(w, inside).size(), cut);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Families, GraphProperties,
    ::testing::Values(FamilySpec{family::Grid2d{}}, FamilySpec{family::Grid2d{true}},
                      FamilySpec{family::CayleyFree{3}}, FamilySpec{family::BiinfiniteLine{}},
                      FamilySpec{family::BiinfiniteComb{}}, FamilySpec{family::Ladder{}},
                      FamilySpec{family::GrowingCircuitChain{{4, 6, 8}}}));

TEST(StarToComb, UnfoldsHighDegreeVerticesIntoPaths) {
  const auto tree = build_window(family::CayleyFree{5}, std::nullopt, 2);
  ASSERT_TRUE(tree.is_tree());
  const auto comb = star_to_comb(tree);
  EXPECT_TRUE(comb.tree.is_tree());
  EXPECT_LE(comb.tree.max_degree(), 3);
  std::size_t expected = 0;
  for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
    const std::size_t d = tree.degree(static_cast<VertexId>(v));
    expected += d > 3 ? d - 2 : 1;
  }
  EXPECT_EQ(comb.tree.num_vertices(), expected);
  // Original distances grow by at most the unfolded path lengths.
  const auto d0 = oracle::all_distances(tree);
  const auto d1 = oracle::all_distances(comb.tree);
  for (std::size_t a = 0; a < tree.num_vertices(); ++a) {
    for (std::size_t b = 0; b < tree.num_vertices(); ++b) {
      EXPECT_GE(d1[comb.image[a]][comb.image[b]], d0[a][b]);
      EXPECT_LE(d1[comb.image[a]][comb.image[b]], d0[a][b] * 4);
    }
  }
}

TEST(StarToComb, RejectsNonTrees) {
  EXPECT_THROW(star_to_comb(build_window(family::Grid2d{}, std::nullopt, 2)), PreconditionError);
}

}  // namespace
}  // namespace ufh
