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
#include "samplers.hpp"
#include "ufh/expansion.hpp"
#include "ufh/families.hpp"

namespace ufh {
namespace {

Ratio oracle_cheeger(const GraphWindow& w) {
  const auto [num, den] = oracle::cheeger(w);
  return Ratio(num, den);
}

TEST(Cheeger, KnownValues) {
  const auto c6 = build_window(family::Cycle{6}, std::nullopt, 3);
  EXPECT_EQ(cheeger(c6, CheegerMode::kExact).value, Ratio(2, 3));
  EXPECT_EQ(oracle_cheeger(c6), Ratio(2, 3));
  const auto k4 = oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(cheeger(k4, CheegerMode::kExact).value, Ratio(2));
  EXPECT_EQ(oracle_cheeger(k4), Ratio(2));
}

TEST(Cheeger, ExactMatchesBruteForceAndBoundsTheHeuristic) {
  std::vector<GraphWindow> ws;
  ws.push_back(build_window(family::Grid2d{}, std::nullopt, 2));
  ws.push_back(build_window(family::Grid2d{true}, std::nullopt, 2));
  ws.push_back(build_window(family::CayleyFree{3}, std::nullopt, 2));
  ws.push_back(build_window(family::Ladder{}, std::nullopt, 4));
  ws.push_back(build_window(family::Cycle{11}, std::nullopt, 6));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution bit(0.35);
    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b)
        if (bit(rng)) edges.emplace_back(a, b);
    ws.push_back(oracle::make_graph(10, edges));
  }
  for (const auto& w : ws) {
    const auto exact = cheeger(w, CheegerMode::kExact);
    EXPECT_TRUE(exact.exact);
    EXPECT_EQ(exact.value, oracle_cheeger(w)) << w.family_tag();
    // The witness realizes the value.
    const auto cut = edge_boundary(w, std::span<const VertexId>(exact.witness));
    EXPECT_EQ(Ratio(static_cast<std::int64_t>(cut.size()),
                    static_cast<std::int64_t>(exact.witness.size())),
              exact.value);
    EXPECT_GE(cheeger(w, CheegerMode::kHeuristic).value, exact.value);
  }
}

TEST(Cheeger, ExactModeRefusesLargeWindows) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 4);
  EXPECT_THROW(cheeger(w, CheegerMode::kExact), PreconditionError);
}

TEST(Cheeger, RelativeMatchesBruteForce) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 4);
  const auto U = membership_mask(w, ball(w, w.center(), 2));
  std::vector<VertexId> us;
  for (std::size_t v = 0; v < U.size(); ++v)
    if (U[v]) us.push_back(static_cast<VertexId>(v));
  Ratio best(1000);
  for (std::uint32_t mask = 1; mask < (1u << us.size()); ++mask) {
    std::vector<bool> S(w.num_vertices(), false);
    for (std::size_t i = 0; i < us.size(); ++i) S[us[i]] = mask >> i & 1;
    std::int64_t cut = 0;
    for (const auto& e : w.edges()) cut += S[e.u] != S[e.v];
    best = std::min(best, Ratio(cut, __builtin_popcount(mask)));
  }
  EXPECT_EQ(relative_cheeger(w, U).value, best);
}

TEST(Cheeger, BallRatios) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 4);
  const auto r = ball_ratios(w);
  ASSERT_EQ(r.size(), 4u);
  // |B_k| = 2k^2 + 2k + 1, |dB_k| = 8k + 4.
  for (int k = 0; k < 4; ++k) EXPECT_EQ(r[k], Ratio(8 * k + 4, 2 * k * k + 2 * k + 1));
}

TEST(H0, WitnessOnTrivalentTreeWindows) {
  for (int R : {3, 4, 5}) {
    const auto w = build_window(family::CayleyFree{3}, std::nullopt, R);
    const auto U = membership_mask(w, ball(w, w.center(), 2));
    const Ratio eps = relative_cheeger(w, U).value;
    std::vector<VertexId> W;
    for (std::size_t v = 0; v < U.size(); ++v)
      if (U[v] && v % 2 == 0) W.push_back(static_cast<VertexId>(v));
    const auto h = h0_expansion_witness(w, U, W, eps);
    EXPECT_EQ(h.bound, (eps.denominator() + eps.numerator() - 1) / eps.numerator());
    EXPECT_LE(sup_norm(h.g), h.bound);
    EXPECT_LE(h.capacity, h.bound);
    const auto d = defects(w, h.g);
    for (std::size_t v = 0; v < U.size(); ++v) {
      if (!U[v]) continue;
      const bool inW = std::find(W.begin(), W.end(), static_cast<VertexId>(v)) != W.end();
      EXPECT_EQ(d[v], inW ? 1 : 0) << v;
    }
  }
}

TEST(H0, RejectsTooLargeEpsilon) {
  const auto w = build_window(family::CayleyFree{3}, std::nullopt, 4);
  const auto U = membership_mask(w, ball(w, w.center(), 1));
  const Ratio eps = relative_cheeger(w, U).value;
  EXPECT_THROW(h0_expansion_witness(w, U, {w.center()}, eps + Ratio(1)), PreconditionError);
}

// Unit square (0,0) (1,0) (1,1) (0,1) as a closed walk.
std::vector<VertexId> unit_square(const GraphWindow& w) {
  return {w.at({0, 0}), w.at({1, 0}), w.at({1, 1}), w.at({0, 1})};
}

std::vector<bool> one_ball(const GraphWindow& w, const std::vector<VertexId>& c) {
  std::vector<bool> U(w.num_vertices(), false);
  for (VertexId v : c) {
    U[v] = true;
    for (VertexId u : w.neighbors(v)) U[u] = true;
  }
  return U;
}

TEST(H1Probe, SquaresFillWithNormOneInTheTriangulatedGrid) {
  const auto w = build_window(family::Grid2d{true}, std::nullopt, 5);
  const RipsComplex rips(w, 1);
  const auto sq = unit_square(w);
  const auto U = one_ball(w, sq);
  for (Ring ring : {Ring::kZ, Ring::kZ2}) {
    const auto res = h1_expansion_probe(rips, U, circuit_chain(sq, ring));
    EXPECT_TRUE(res.feasible);
    EXPECT_TRUE(res.exact);
    EXPECT_EQ(res.norm, 1);
    EXPECT_TRUE(verify_filling(rips, U, circuit_chain(sq, ring), res.g));
  }
}

TEST(H1Probe, SquaresDoNotFillAtRadiusOneInTheSquareGrid) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 5);
  const auto sq = unit_square(w);
  const auto U = one_ball(w, sq);
  for (Ring ring : {Ring::kZ, Ring::kZ2}) {
    const auto res = h1_expansion_probe(RipsComplex(w, 1), U, circuit_chain(sq, ring));
    EXPECT_FALSE(res.feasible);
    EXPECT_TRUE(res.exact);
    const auto res2 = h1_expansion_probe(RipsComplex(w, 2), U, circuit_chain(sq, ring));
    EXPECT_TRUE(res2.feasible);
  }
}

TEST(H1Probe, VerifyFillingIsIndependent) {
  const auto w = build_window(family::Grid2d{true}, std::nullopt, 4);
  const RipsComplex rips(w, 1);
  const auto sq = unit_square(w);
  const auto U = one_ball(w, sq);
  const Chain f = circuit_chain(sq, Ring::kZ);
  Chain g(2, Ring::kZ);
  EXPECT_FALSE(verify_filling(rips, U, f, g));
  // The two triangles of the square, oriented to match f.
  g.add({sq[0], sq[1], sq[2]}, 1);
  g.add({sq[0], sq[2], sq[3]}, 1);
  ASSERT_EQ(boundary(g), f);
  EXPECT_TRUE(verify_filling(rips, U, f, g));
}

TEST(H1Probe, Z2NormIsNonIncreasingInRipsRadius) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 6);
  const auto circuits = enumerate_simple_circuits(w, 8, kDefaultCircuitCap,
                                                  nullptr);
  std::vector<Circuit> inner;
  for (const auto& c : circuits) {
    if (std::all_of(c.vertices.begin(), c.vertices.end(),
                    [&](VertexId v) { return w.is_inner(v, 3); })) {
      inner.push_back(c);
    }
  }
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> pick(0, inner.size() - 1);
  const std::int64_t kInfNorm = std::numeric_limits<std::int64_t>::max();
  for (int t = 0; t < 10; ++t) {
    const auto& c = inner[pick(rng)];
    const auto U = one_ball(w, c.vertices);
    const Chain f = circuit_chain(c.vertices, Ring::kZ2);
    std::int64_t prev = kInfNorm;
    for (int r = 1; r <= 3; ++r) {
      const auto res = h1_expansion_probe(RipsComplex(w, r), U, f);
      const std::int64_t norm = res.feasible ? res.norm : kInfNorm;
      EXPECT_LE(norm, prev);
      prev = norm;
    }
  }
}

TEST(H1Probe, RejectsChainsLeavingU) {
  const auto w = build_window(family::Grid2d{true}, std::nullopt, 4);
  const auto sq = unit_square(w);
  std::vector<bool> U(w.num_vertices(), false);
  U[sq[0]] = U[sq[1]] = true;
  EXPECT_THROW(h1_expansion_probe(RipsComplex(w, 1), U, circuit_chain(sq, Ring::kZ2)),
               PreconditionError);
}

TEST(PureFilter, CircuitsPassAndBoundaryDefectsFail) {
  const auto w = build_window(family::Grid2d{}, std::nullopt, 4);
  const RipsComplex rips(w, 2);
  const auto sq = unit_square(w);
  EXPECT_TRUE(pure_filter(rips, one_ball(w, sq), circuit_chain(sq, Ring::kZ)));
  const auto line = sample::grid_line(w, true, 0);
  std::vector<bool> all(w.num_vertices(), true);
  EXPECT_FALSE(pure_filter(rips, all, path_chain(line, Ring::kZ)));
  EXPECT_TRUE(pure_filter(rips, all, Chain(1, Ring::kZ)));
}

TEST(Summary, KTableKeepsTheLargestNormPerInput) {
  std::vector<ProbeSample> samples(3);
  samples[0].input_norm = 1;
  samples[0].result.feasible = true;
  samples[0].result.exact = true;
  samples[0].result.norm = 2;
  samples[1].input_norm = 1;
  samples[1].result.feasible = true;
  samples[1].result.exact = false;
  samples[1].result.norm = 3;
  samples[2].input_norm = 1;
  const auto rep = summarize_probes(samples);
  EXPECT_EQ(rep.k_table.at(1), 3);
  EXPECT_EQ(rep.infeasible, 1u);
  EXPECT_FALSE(rep.all_exact);
}

}  // namespace
}  // namespace ufh
