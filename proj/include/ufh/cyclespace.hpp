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

// GF(2) cycle space of a window: simple circuits, leading-index elimination,
// length-filtered bases and the large-circuit profile.

#ifndef UFH_CYCLESPACE_HPP_
#define UFH_CYCLESPACE_HPP_

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <vector>

#include "ufh/chain.hpp"
#include "ufh/families.hpp"
#include "ufh/graph.hpp"

namespace ufh {

// Indexed by EdgeId; the edge order is the window's edge order.
using EdgeSet = boost::dynamic_bitset<>;

EdgeSet edge_set(const GraphWindow& w, const Chain& c);
EdgeSet edge_set_of_cycle(const GraphWindow& w, const std::vector<VertexId>& cycle);
// Smallest set index; npos when empty.
std::size_t leading_index(const EdgeSet& s);

struct Circuit {
  std::vector<VertexId> vertices;  // cyclic order, first vertex is the minimum
  std::vector<EdgeId> edges;       // sorted
  EdgeSet set;
  std::size_t length() const { return vertices.size(); }
};

inline constexpr std::size_t kDefaultCircuitCap = 1'000'000;

// All simple circuits of length <= max_len, each once, sorted by length and
// then by edge list. When `allowed` is given only its vertices are used.
// Throws CapExceeded beyond `cap` circuits.
std::vector<Circuit> enumerate_simple_circuits(const GraphWindow& w, int max_len,
                                               std::size_t cap = kDefaultCircuitCap,
                                               const std::vector<bool>* allowed = nullptr);

struct FilteredCycleBasis {
  std::size_t num_edges = 0;
  std::vector<EdgeSet> elements;
  std::vector<std::size_t> leading;
  // Length of the row that produced each element; non-decreasing when the
  // rows are fed by length.
  std::vector<int> lengths;
  // For every input row, indices of elements whose XOR equals that row.
  std::vector<std::vector<int>> representation;

  // |B_i|: number of elements coming from rows of length <= i.
  std::size_t prefix_size(int length) const;
};

// Sequential elimination in input order. Each row is reduced by one ordered
// pass over the elements found so far (add g_t when the row has a 1 at
// l(g_t)); a nonzero remainder becomes a new element.
FilteredCycleBasis gaussian_leading_basis(const std::vector<EdgeSet>& rows,
                                          const std::vector<int>& lengths,
                                          std::size_t num_edges);
FilteredCycleBasis gaussian_leading_basis(const std::vector<Circuit>& circuits,
                                          std::size_t num_edges);

struct Membership {
  bool member = false;
  std::vector<int> coefficients;  // element indices, when member
  EdgeSet residue;
};
// Reduces f against B_i (i = length_cap; negative means the whole basis).
Membership membership(const EdgeSet& f, const FilteredCycleBasis& basis,
                      int length_cap = -1);

struct ProfileRow {
  int r = 0;
  std::size_t dimension = 0;
  std::size_t new_elements = 0;
};

struct WindowProfile {
  int window_radius = 0;
  int margin = 0;
  std::size_t circuits = 0;
  std::vector<ProfileRow> rows;  // r = 3 .. r_max
  // Smallest r after which the dimension no longer grows.
  int stable_from = 3;
};

struct LargeCircuitProfile {
  int r_max = 0;
  std::vector<WindowProfile> windows;
  bool stabilized = false;
  int r0 = 0;
  std::string verdict;
};

// Interior circuits: every vertex at distance >= margin from the boundary.
WindowProfile interior_profile(const GraphWindow& w, int r_max, int margin,
                               std::size_t cap = kDefaultCircuitCap);

// Stabilized at r0 when the last two window radii agree on stable_from and it
// lies below r_max; otherwise "large circuits up to r_max". margin < 0 picks
// radius / 4 per window.
LargeCircuitProfile large_circuit_profile(const FamilySpec& spec, int r_max,
                                          const std::vector<int>& window_radii,
                                          int margin = -1,
                                          std::size_t cap = kDefaultCircuitCap);

}  // namespace ufh

#endif  // UFH_CYCLESPACE_HPP_
