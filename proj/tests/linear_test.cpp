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

#include "ufh/linear.hpp"

namespace ufh {
namespace {

// All x in {0,1}^n with A x = b, by enumeration.
std::vector<std::uint32_t> brute_gf2(const std::vector<Bits>& cols, const Bits& rhs) {
  std::vector<std::uint32_t> out;
  const std::size_t n = cols.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Bits acc(rhs.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) acc ^= cols[j];
    }
    if (acc == rhs) out.push_back(mask);
  }
  return out;
}

TEST(Gf2, MatchesEnumerationOnRandomSystems) {
  std::mt19937_64 rng(1);
  std::bernoulli_distribution bit(0.4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 2 + trial % 7, n = 1 + trial % 9;
    std::vector<Bits> cols(n, Bits(rows));
    Bits rhs(rows);
    for (auto& c : cols)
      for (std::size_t i = 0; i < rows; ++i) c[i] = bit(rng);
    for (std::size_t i = 0; i < rows; ++i) rhs[i] = bit(rng);
    const auto sols = brute_gf2(cols, rhs);
    const auto got = gf2_solve(cols, rhs);
    ASSERT_EQ(got.feasible, !sols.empty());
    if (!got.feasible) continue;
    // Solution count is 2^dim(kernel).
    EXPECT_EQ(sols.size(), std::size_t{1} << got.kernel.size());
    Bits acc(rows);
    for (std::size_t j = 0; j < n; ++j) {
      if (got.x[j]) acc ^= cols[j];
    }
    EXPECT_EQ(acc, rhs);
    std::size_t best = n + 1;
    for (auto m : sols) best = std::min<std::size_t>(best, __builtin_popcount(m));
    const Bits low = gf2_reduce_weight(got.x, got.kernel);
    EXPECT_GE(low.count(), best);
    EXPECT_LE(low.count(), got.x.count());
    Bits chk(rows);
    for (std::size_t j = 0; j < n; ++j) {
      if (low[j]) chk ^= cols[j];
    }
    EXPECT_EQ(chk, rhs);
  }
}

TEST(IntSolve, SolvesAndDetectsLatticeObstructions) {
  // 2x = 1 has no integer solution although it has a rational one.
  EXPECT_FALSE(int_solve({{{0, 2}}}, {{0, 1}}).feasible);
  // 4x + 6y = 2.
  const auto s = int_solve({{{0, 4}}, {{0, 6}}}, {{0, 2}});
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(4 * s.x[0] + 6 * s.x[1], 2);
  // Inconsistent rows.
  EXPECT_FALSE(int_solve({{{0, 1}, {1, 1}}}, {{0, 1}, {1, 2}}).feasible);
}

TEST(IntSolve, MatchesBoundedSearchOnRandomSystems) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> entry(-2, 2), val(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 3, n = 3;
    std::vector<SparseVec> cols(n);
    std::vector<std::vector<int>> a(rows, std::vector<int>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < rows; ++i) {
        a[i][j] = entry(rng);
        if (a[i][j]) cols[j][i] = a[i][j];
      }
    // Right-hand side from a known integer point, half the time perturbed.
    std::vector<int> x0{val(rng), val(rng), val(rng)};
    SparseVec rhs;
    std::vector<int> b(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
      if (trial % 2) b[i] += entry(rng);
      if (b[i]) rhs[i] = b[i];
    }
    const auto got = int_solve(cols, rhs);
    if (trial % 2 == 0) {
      ASSERT_TRUE(got.feasible);
    }
    if (got.feasible) {
      for (std::size_t i = 0; i < rows; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += a[i][j] * got.x[j];
        EXPECT_EQ(acc, b[i]);
      }
    } else {
      // No small solution either.
      for (int p = -12; p <= 12; ++p)
        for (int q = -12; q <= 12; ++q)
          for (int r = -12; r <= 12; ++r) {
            bool ok = true;
            for (std::size_t i = 0; i < rows && ok; ++i) {
              ok = a[i][0] * p + a[i][1] * q + a[i][2] * r == b[i];
            }
            ASSERT_FALSE(ok);
          }
    }
  }
}

}  // namespace
}  // namespace ufh
