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

// Run configuration: INI-style sections of key = value lines. The grammar is
// documented in README.md.

#ifndef UFH_CONFIG_HPP_
#define UFH_CONFIG_HPP_

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "ufh/chain.hpp"
#include "ufh/cyclespace.hpp"
#include "ufh/families.hpp"

namespace ufh {

struct RunConfig {
  FamilySpec family = family::Grid2d{};
  std::string family_name = "grid2d";

  std::vector<int> window_radii{6, 8, 10};
  int margin = -1;  // -1: radius / 4 per window
  int r_max = 6;
  std::size_t max_circuits = kDefaultCircuitCap;

  std::vector<int> rips_radii{1};

  Ring ring = Ring::kZ2;
  int probes_per_window = 4;
  int samples = 20;
  std::int64_t c_max = 4;
  std::size_t node_budget = 200'000;

  // Tree round trips (tree-iso).
  TreeSpec tree;
  int tree_depth = 0;  // 0: one more than the number of branching levels
  std::int64_t ray_len = 8;
  int cycles = 100;
  std::int64_t coeff_max = 3;
  int comb_teeth = 0;  // 0: no comb table

  std::uint64_t seed = 1;
};

// Throws PreconditionError with the offending key on malformed input.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);
void validate(const RunConfig& config);

}  // namespace ufh

#endif  // UFH_CONFIG_HPP_
