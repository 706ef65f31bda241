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

// Pseudo-ends of windows, end-defining trees and pushing Z/2 cycles onto them.

#ifndef UFH_ENDS_HPP_
#define UFH_ENDS_HPP_

#include <vector>

#include "ufh/chain.hpp"
#include "ufh/graph.hpp"

namespace ufh {

// Components of w - K. Those touching the window boundary stand in for the
// infinite components (pseudo-ends); the rest are finite.
struct EndPartition {
  std::vector<std::vector<VertexId>> pseudo_ends;
  std::vector<std::vector<VertexId>> finite;
};

// K must be nonempty, connected and free of boundary vertices.
EndPartition end_partition(const GraphWindow& w, const std::vector<bool>& K);
// Number of boundary-touching components of w - K, without the checks.
int pseudo_end_count(const GraphWindow& w, const std::vector<bool>& K);

struct EndDefiningTree {
  std::vector<EdgeId> edges;     // sorted
  std::vector<bool> in_tree;     // per vertex
  std::vector<int> separator_radii;  // K_n = B(center, separator_radii[n])
  // Per separator: T meets K_n in a connected set and the tree boundary
  // edges of T n K_n match the pseudo-ends of w - K_n one to one.
  std::vector<bool> bijection_ok;
  // Tree vertices on the window boundary, one per final branch.
  std::vector<VertexId> tips;
};

// Built ring by ring around the window center: every pseudo-end of
// w - B(center, R) receives one tree branch, reached from the branch of the
// pseudo-end containing it by a BFS path inside that component and the next
// ball. Final branches run to the window boundary. Separators are the balls
// B(center, R) with R <= boundary distance - 2.
EndDefiningTree end_defining_tree(const GraphWindow& w);

// Verifies the separator conditions for T and K directly.
bool separator_bijection(const GraphWindow& w, const std::vector<EdgeId>& tree_edges,
                         const std::vector<bool>& K);

// Finite circuit set D such that f - sum D lives on T, except on the rim of
// the window (vertices closer than `margin` to the boundary).
struct PushResult {
  std::vector<std::vector<VertexId>> circuits;  // closed walks
  Chain residue;
};
PushResult push_to_tree_z2(const GraphWindow& w, const Chain& f,
                           const EndDefiningTree& tree, int margin);

}  // namespace ufh

#endif  // UFH_ENDS_HPP_
