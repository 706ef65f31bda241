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

// Trivalent trees grown ray by ray, their bip sets and coefficient recovery.

#ifndef UFH_TREES_HPP_
#define UFH_TREES_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ufh/chain.hpp"
#include "ufh/families.hpp"
#include "ufh/graph.hpp"

namespace ufh {

// T_depth truncated: spine positions in [-ray_len, ray_len], every ray of
// depth < depth with positions 1..ray_len. Keys are {ray, position}; ids in
// BFS order from the origin; boundary = spine ends and ray tips.
GraphWindow build_tree(const TreeSpec& spec, int depth, std::int64_t ray_len);

// Depth of the tree piece a vertex first appears in: 0 for the origin, 1 on
// the spine, n + 1 on a ray of depth n.
int tree_level(const TreeLayout& layout, const VertexKey& key);

struct Bip {
  std::vector<VertexId> path;  // boundary to boundary
  int depth = 1;               // p is in P_depth
  std::vector<EdgeId> edges;   // sorted
};

struct BipBasis {
  BipBasis(GraphWindow t, TreeLayout l) : tree(std::move(t)), layout(std::move(l)) {}

  GraphWindow tree;
  TreeLayout layout;
  int depth = 1;
  std::vector<Bip> bips;
  // less[p][q]: p < q in the partial order (transitive closure of "p in P_n
  // and q in P_{n+1} share an edge").
  std::vector<std::vector<bool>> less;
  std::vector<int> order;  // well-order: position -> bip
  std::vector<int> rank;   // bip -> position
  std::vector<std::vector<int>> cover;  // edge -> bips over it, ascending
  // Last bip over each edge, -1 when there is none.
  std::vector<int> last_partial;
  std::vector<int> last_total;
  std::vector<std::vector<EdgeId>> m_partial;  // M_p under the partial order
  std::vector<std::vector<EdgeId>> m_total;    // M_p under the well-order

  // +1 when the bip runs along e = (u, v), u < v, from u to v; -1 against;
  // 0 when it does not use e.
  int sign(int bip, EdgeId e) const;
};

struct TamenessReport {
  bool at_most_three_cover = true;     // clause 1
  bool new_bips_avoid_old_tree = true; // clause 2
  bool covers_each_level = true;       // clause 3
  bool finite_pred_nonempty_m = true;  // clause 4
  bool predecessor_edge = true;        // clause 5
  bool m_connected = true;             // clause 6
  // Well-order: ET = disjoint union of M_p, each nonempty and connected.
  bool total_partition = true;
  std::vector<std::string> failures;

  bool all() const {
    return at_most_three_cover && new_bips_avoid_old_tree && covers_each_level &&
           finite_pred_nonempty_m && predecessor_edge && m_connected && total_partition;
  }
};

// Bips of T_depth: P_1 is the spine; for every ray u of depth n - 1 (the
// spine counts as two half rays from the origin) with branching points
// v_0 < v_1 < ... on it, P_{n+1} gets R_{v_i}^-1 + [v_i, v_{i+1}] + R_{v_{i+1}}
// and finally R_{v_k}^-1 + [v_k, end of u]. Throws std::logic_error when a
// tameness clause fails.
BipBasis construct_bips(const TreeSpec& spec, int depth, std::int64_t ray_len);
TamenessReport check_tameness(const BipBasis& pb);

// Extends a strict partial order (less[p][q]: p < q) to a total order by the
// diagonal sweep over height levels. Ties go to the smallest index.
std::vector<int> well_order(const std::vector<std::vector<bool>>& less);

struct TreeCoefficients {
  std::vector<std::int64_t> f;  // per bip
  bool well_defined = true;     // same value from every e in M_p
};
// f(p) = c(e) - sum_{e in q < p} f(q) in well-order, e the first edge of M_p.
// Throws std::logic_error when two edges of some M_p disagree.
TreeCoefficients tree_coefficients(const Chain& c, const BipBasis& pb);

Chain bips_to_cycle(const std::vector<std::int64_t>& f, const BipBasis& pb, Ring ring);

// Comb with the green/red bip set and the alternating teeth cycle.
struct CombGrowth {
  int n_teeth = 0;
  // Recovered coefficient magnitudes of the tooth-to-tooth bips, left to right.
  std::vector<std::int64_t> green;
  std::vector<std::int64_t> red;
  std::int64_t max_magnitude = 0;
  bool strictly_increasing = true;
  // Whether evaluating on a tooth edge of M_p gives the same values.
  bool tooth_consistent = true;
};
CombGrowth comb_counterexample_check(int n_teeth);

}  // namespace ufh

#endif  // UFH_TREES_HPP_
