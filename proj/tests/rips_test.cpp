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

#include "oracles.hpp"
#include "ufh/cyclespace.hpp"
#include "ufh/families.hpp"
#include "ufh/rips.hpp"

namespace ufh {
namespace {

class RipsFamilies : public ::testing::TestWithParam<std::pair<FamilySpec, int>> {};

TEST_P(RipsFamilies, TrianglesAndEdgesMatchBruteForce) {
  const auto w = build_window(GetParam().first, std::nullopt, GetParam().second);
  const auto d = oracle::all_distances(w);
  for (int r = 1; r <= 3; ++r) {
    const RipsComplex rips(w, r);
    EXPECT_EQ(rips.triangles().size(), oracle::rips_triangles(w, r)) << "r=" << r;
    std::size_t edges = 0;
    for (std::size_t a = 0; a < w.num_vertices(); ++a)
      for (std::size_t b = a + 1; b < w.num_vertices(); ++b) edges += d[a][b] <= r;
    EXPECT_EQ(rips.edges().size(), edges);
  }
}

TEST_P(RipsFamilies, FixedPathsAreShortestAndAntisymmetric) {
  const auto w = build_window(GetParam().first, std::nullopt, GetParam().second);
  const auto d = oracle::all_distances(w);
  const RipsComplex rips(w, 3);
  for (const auto& e : rips.edges()) {
    const auto p = rips.path(e.u, e.v);
    ASSERT_EQ(p.front(), e.u);
    ASSERT_EQ(p.back(), e.v);
    EXPECT_EQ(static_cast<int>(p.size()) - 1, d[e.u][e.v]);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(w.find_edge(p[i], p[i + 1]));
    auto q = rips.path(e.v, e.u);
    std::reverse(q.begin(), q.end());
    EXPECT_EQ(p, q);
  }
}

INSTANTIATE_TEST_SUITE_P(Windows, RipsFamilies,
                         ::testing::Values(std::pair{FamilySpec{family::Grid2d{}}, 3},
                                           std::pair{FamilySpec{family::Grid2d{true}}, 3},
                                           std::pair{FamilySpec{family::Cycle{7}}, 4},
                                           std::pair{FamilySpec{family::CayleyFree{3}}, 3}));

TEST(Rips, CycleSixAtRadiusTwo) {
  const auto w = build_window(family::Cycle{6}, std::nullopt, 3);
  EXPECT_EQ(RipsComplex(w, 2).triangles().size(), 8u);
  EXPECT_EQ(oracle::rips_triangles(w, 2), 8u);
}

TEST(Rips, RejectsNonPositiveRadius) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 2);
  EXPECT_THROW(RipsComplex(w, 0), PreconditionError);
}

TEST(Rips, FanTriangulationRoundTripsOnGridCircuits) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 3);
  for (const auto& c : enumerate_simple_circuits(w, 10)) {
    for (Ring ring : {Ring::kZ, Ring::kZ2}) {
      const auto tri = triangulate_circuit(c.vertices, ring);
      EXPECT_EQ(tri.radius, fan_radius(c.length()));
      EXPECT_EQ(boundary(tri.chain), circuit_chain(c.vertices, ring));
      const RipsComplex rips(w, tri.radius);
      EXPECT_EQ(edge_sum(circuits_from_2chain(rips, tri.chain), ring),
                circuit_chain(c.vertices, ring));
    }
  }
}

TEST(Rips, CircuitsFromTwoChainRejectsNonRipsTriangles) {
  const auto w = build_window(family::BiinfiniteLine{}, std::nullopt, 4);
  Chain g(2, Ring::kZ);
  g.add({w.at({-4}), w.at({0}), w.at({4})}, 1);
  EXPECT_THROW(circuits_from_2chain(RipsComplex(w, 2), g), PreconditionError);
}

TEST(Rips, TracedCyclesDifferByABoundary) {
  const auto w = build_window(family::Grid2d{true}, std::nullopt, 4);
  const RipsComplex rips(w, 2);
  const auto tris = rips.triangles();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, tris.size() - 1);
  for (Ring ring : {Ring::kZ, Ring::kZ2}) {
    for (int trial = 0; trial < 50; ++trial) {
      Chain g(2, ring);
      for (int i = 0; i < 4; ++i) {
        const auto& t = tris[pick(rng)];
        g.add({t[0], t[1], t[2]}, 1 + i);
      }
      const Chain f = boundary(g);
      const auto traced = trace_virtual_edges(rips, f);
      for (const auto& [e, c] : traced.traced.terms()) EXPECT_TRUE(w.find_edge(e[0], e[1]));
      EXPECT_EQ(boundary(traced.witness), f - traced.traced);
      EXPECT_EQ(edge_sum(circuits_from_2chain(rips, g), ring), traced.traced);
    }
  }
}

}  // namespace
}  // namespace ufh
