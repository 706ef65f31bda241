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

// Isoperimetric constants, degree-0 witness flows, degree-1 filling probes
// and the combined ends / large circuits / expansion verdict.

#ifndef UFH_EXPANSION_HPP_
#define UFH_EXPANSION_HPP_

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ufh/chain.hpp"
#include "ufh/cyclespace.hpp"
#include "ufh/families.hpp"
#include "ufh/graph.hpp"
#include "ufh/rips.hpp"

namespace ufh {

using Ratio = boost::rational<std::int64_t>;

enum class CheegerMode { kExact, kHeuristic };

struct CheegerResult {
  Ratio value{0};
  std::vector<VertexId> witness;  // sorted
  bool exact = false;
};

inline constexpr std::size_t kMaxExactCheegerVertices = 24;

// min |dU| / |U| over nonempty U with |U| <= |V| / 2 (edge boundary inside
// the window). Exact mode enumerates subsets in Gray-code order and needs
// |V| <= 24; heuristic mode returns the better of a ball sweep and greedy
// single-vertex toggles, an upper bound.
CheegerResult cheeger(const GraphWindow& w, CheegerMode mode);

// min |dS| / |S| over nonempty S inside U, |U| <= 24.
CheegerResult relative_cheeger(const GraphWindow& w, const std::vector<bool>& U);

// |dB_k| / |B_k| for the balls around the window center, k = 0 .. radius - 1.
std::vector<Ratio> ball_ratios(const GraphWindow& w);

struct H0Witness {
  Chain g{1, Ring::kZ};
  std::int64_t capacity = 0;  // smallest edge capacity that carried the flow
  std::int64_t bound = 0;     // ceil(1 / eps)
};

// g with dg = chi_W on U (dg(v) = inflow - outflow) and |g| <= ceil(1/eps),
// fed from the vertices outside U. eps is checked against relative_cheeger
// when |U| <= 20. Throws std::runtime_error when no flow exists.
H0Witness h0_expansion_witness(const GraphWindow& w, const std::vector<bool>& U,
                               const std::vector<VertexId>& W, Ratio eps);

struct ProbeOptions {
  std::int64_t c_max = 4;              // largest sup norm tried by the search
  std::size_t node_budget = 200'000;   // per norm bound
};

struct ProbeResult {
  Ring ring = Ring::kZ2;
  bool feasible = false;
  // feasible: norm is the optimum. infeasible: no filling exists at all.
  bool exact = false;
  std::int64_t norm = 0;  // sup norm of g
  std::size_t support = 0;
  Chain g{2, Ring::kZ2};
  std::size_t variables = 0;  // triangles with all vertices in U
  std::string method;
};

// Looks for a 2-chain g of the Rips complex with dg = f on every Rips edge
// inside U. Over Z/2 the solve is exact and the support is shrunk greedily
// (heuristic). Over Z lattice feasibility is exact and the norm comes from a
// bounded search over |g| <= c_max; `exact` is false when the search ran out
// of budget.
ProbeResult h1_expansion_probe(const RipsComplex& rips, const std::vector<bool>& U,
                               const Chain& f, const ProbeOptions& options = {});

// Independent check of dg = f on the Rips edges inside U.
bool verify_filling(const RipsComplex& rips, const std::vector<bool>& U, const Chain& f,
                    const Chain& g);

// Whether f extends to a boundary of the window's Rips complex: defects on
// the window boundary give false; otherwise f is closed by finite_extension
// and tested for membership in the image of d, using the triangles inside a
// ball that covers the closed chain plus the Rips radius.
bool pure_filter(const RipsComplex& rips, const std::vector<bool>& U, const Chain& f);

struct ProbeSample {
  int window_radius = 0;
  int rips_radius = 0;
  std::vector<VertexId> circuit;
  std::size_t u_size = 0;
  std::int64_t input_norm = 0;
  ProbeResult result;
};

struct ExpansionReport {
  std::vector<ProbeSample> samples;
  // Input norm -> largest minimal norm over feasible samples.
  std::map<std::int64_t, std::int64_t> k_table;
  std::size_t infeasible = 0;
  bool all_exact = true;
};
ExpansionReport summarize_probes(std::vector<ProbeSample> samples);

struct TriadOptions {
  std::vector<int> window_radii{6, 8, 10};
  std::vector<int> rips_radii{1};
  int r_max = 6;
  int margin = -1;  // -1: radius / 4
  int probes_per_window = 4;
  Ring ring = Ring::kZ2;
  std::size_t circuit_cap = kDefaultCircuitCap;
  ProbeOptions probe;
};

struct ProbeTrend {
  int rips_radius = 0;
  // Per window radius: largest minimal norm, nullopt when every sample was
  // infeasible or no sample existed.
  std::vector<std::optional<std::int64_t>> k;
  std::vector<std::size_t> sampled;
  bool evidence = false;
  std::string reason;
};

struct TriadReport {
  std::vector<int> window_radii;
  std::vector<int> end_counts;  // pseudo-ends of B(center, R/2) per radius
  bool ends = false;
  LargeCircuitProfile profile;
  bool large_circuits = false;
  std::vector<ProbeTrend> trends;
  ExpansionReport probes;
  bool non_expansion = false;
  std::vector<std::string> phenomena;  // subset of ends, large circuits, non-expansion
  std::string verdict;                 // phenomena joined by ", " or "none"
  std::string verdict_text;
  std::vector<std::string> notes;
};

// Non-expansion evidence: minimal norms strictly growing across >= 3 window
// radii at fixed input norm, or every sample infeasible at every radius.
// This is a finite heuristic and is labeled as such in the notes.
TriadReport triad_report(const FamilySpec& spec, const TriadOptions& options);

}  // namespace ufh

#endif  // UFH_EXPANSION_HPP_
