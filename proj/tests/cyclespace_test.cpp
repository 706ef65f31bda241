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

namespace ufh {
namespace {

std::vector<int> bits_to_list(const EdgeSet& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != EdgeSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

GraphWindow grid3x3() {
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) {
      if (x < 2) edges.emplace_back(3 * y + x, 3 * y + x + 1);
      if (y < 2) edges.emplace_back(3 * y + x, 3 * y + x + 3);
    }
  return oracle::make_graph(9, edges);
}

GraphWindow complete4() {
  return oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

std::vector<GraphWindow> small_windows() {
  std::vector<GraphWindow> out;
  out.push_back(grid3x3());
  out.push_back(complete4());
  out.push_back(build_window(family::Grid2d{}, std::nullopt, 2));
  out.push_back(build_window(family::Grid2d{true}, std::nullopt, 1));
  out.push_back(build_window(family::Cycle{6}, std::nullopt, 3));
  out.push_back(build_window(family::Ladder{}, std::nullopt, 3));
  out.push_back(build_window(family::GrowingCircuitChain{{4, 6}}, std::nullopt, 20));
  out.push_back(build_window(family::CayleyFree{3}, std::nullopt, 2));
  return out;
}

TEST(Circuits, EnumerationMatchesBruteForce) {
  for (const auto& w : small_windows()) {
    auto expected = oracle::simple_circuits(w);
    std::sort(expected.begin(), expected.end());
    std::vector<std::vector<int>> got;
    for (const auto& c : enumerate_simple_circuits(w, static_cast<int>(w.num_edges()))) {
      std::vector<int> e(c.edges.begin(), c.edges.end());
      EXPECT_EQ(e, bits_to_list(c.set));
      EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
      EXPECT_EQ(c.length(), c.edges.size());
      got.push_back(e);
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << w.family_tag();
  }
}

TEST(Circuits, SortedByLengthAndRespectCap) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 4);
  const auto cs = enumerate_simple_circuits(w, 8);
  for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LE(cs[i - 1].length(), cs[i].length());
  EXPECT_THROW(enumerate_simple_circuits(w, 8, 10), CapExceeded);
}

TEST(Basis, SizeIsTheCycleRank) {
  for (const auto& w : small_windows()) {
    const auto cs = enumerate_simple_circuits(w, static_cast<int>(w.num_edges()));
    const auto basis = gaussian_leading_basis(cs, w.num_edges());
    EXPECT_EQ(basis.elements.size(), w.num_edges() - w.num_vertices() + 1) << w.family_tag();
  }
}

TEST(Basis, IndependentAndSpanningByXorEnumeration) {
  for (const auto& w : small_windows()) {
    const auto cs = enumerate_simple_circuits(w, static_cast<int>(w.num_edges()));
    if (cs.size() > 15) continue;
    const auto basis = gaussian_leading_basis(cs, w.num_edges());
    std::vector<std::vector<int>> elems, rows;
    for (const auto& g : basis.elements) elems.push_back(bits_to_list(g));
    for (const auto& c : cs) rows.push_back(std::vector<int>(c.edges.begin(), c.edges.end()));
    const auto span = oracle::xor_span(elems);
    EXPECT_EQ(span.size(), std::size_t{1} << elems.size());  // independent
    EXPECT_EQ(span, oracle::xor_span(rows));                  // same span
    // Leading indices are distinct.
    std::set<std::size_t> leads(basis.leading.begin(), basis.leading.end());
    EXPECT_EQ(leads.size(), basis.leading.size());
    // Representations reproduce each row.
    for (std::size_t i = 0; i < cs.size(); ++i) {
      EdgeSet acc(w.num_edges());
      for (int k : basis.representation[i]) acc ^= basis.elements[k];
      EXPECT_EQ(acc, cs[i].set);
    }
  }
}

TEST(Basis, NestedPrefixOnThreeByThreeGrid) {
  const auto w = grid3x3();
  const auto cs = enumerate_simple_circuits(w, 12);
  ASSERT_EQ(cs.size(), 13u);
  const auto basis = gaussian_leading_basis(cs, w.num_edges());
  EXPECT_EQ(basis.elements.size(), 4u);
  EXPECT_EQ(basis.prefix_size(4), 4u);
  EXPECT_EQ(basis.prefix_size(8), 4u);
  // Every circuit of length <= 8 is in B_4.
  for (const auto& c : cs) EXPECT_TRUE(membership(c.set, basis, 4).member);
}

TEST(Membership, RandomSumsAreMembersAndResiduesAreNot) {
  const auto w = build_window(family::Grid2d{true}, std::nullopt, 3);
  const auto cs = enumerate_simple_circuits(w, 6);
  const auto basis = gaussian_leading_basis(cs, w.num_edges());
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
  for (int t = 0; t < 100; ++t) {
    EdgeSet f(w.num_edges());
    for (int k = 0; k < 4; ++k) f ^= cs[pick(rng)].set;
    const auto m = membership(f, basis);
    ASSERT_TRUE(m.member);
    EdgeSet acc(w.num_edges());
    for (int k : m.coefficients) acc ^= basis.elements[k];
    EXPECT_EQ(acc, f);
    // Triangles alone span this window's cycle space.
    EXPECT_TRUE(membership(f, basis, 3).member);
  }
  EdgeSet single(w.num_edges());
  single.set(0);
  EXPECT_FALSE(membership(single, basis).member);
}

TEST(Profile, TreesHaveNoCircuits) {
  const auto w = build_window(family::CayleyFree{3}, std::nullopt, 5);
  const auto p = interior_profile(w, 8, 1);
  EXPECT_EQ(p.circuits, 0u);
  for (const auto& row : p.rows) EXPECT_EQ(row.dimension, 0u);
}

TEST(Profile, TriangulatedGridStabilizesAtThree) {
  const auto prof = large_circuit_profile(family::Grid2d{true}, 6, {4, 6});
  EXPECT_TRUE(prof.stabilized);
  EXPECT_EQ(prof.r0, 3);
}

TEST(Profile, SquareGridStabilizesAtFour) {
  const auto prof = large_circuit_profile(family::Grid2d{}, 8, {4, 6});
  EXPECT_TRUE(prof.stabilized);
  EXPECT_EQ(prof.r0, 4);
}

TEST(Profile, GrowingChainKeepsAddingElements) {
  const auto prof = large_circuit_profile(family::GrowingCircuitChain{{4, 6, 8, 10}}, 10, {30, 40});
  EXPECT_FALSE(prof.stabilized);
  const auto& rows = prof.windows.back().rows;
  for (int len : {4, 6, 8, 10}) EXPECT_EQ(rows[len - 3].new_elements, 1u) << len;
}

}  // namespace
}  // namespace ufh
