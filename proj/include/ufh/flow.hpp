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

// Circuit / window-bip decomposition of flows and related repairs.

#ifndef UFH_FLOW_HPP_
#define UFH_FLOW_HPP_

#include <vector>

#include "ufh/chain.hpp"
#include "ufh/graph.hpp"

namespace ufh {

enum class PieceKind { kCircuit, kWindowBip };

struct PathPiece {
  PieceKind kind = PieceKind::kCircuit;
  // Walk in traversal order. Circuits are closed (front() == back()); window
  // bips run from a boundary vertex to a boundary vertex.
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size() - 1; }
};

// Unit pieces; their oriented edge sum is the decomposed chain.
struct Decomposition {
  Ring ring = Ring::kZ;
  std::vector<PathPiece> pieces;
  // Max number of pieces over a single edge.
  int multiplicity = 0;

  Chain edge_sum() const;
  std::size_t count(PieceKind kind) const;
};

// Greedy path following with smallest-neighbour choice. Window bips are
// traced first, from boundary sources to boundary sinks; loops met on the way
// are split off as circuits. The remaining balanced flow is then split into
// circuits starting from the smallest vertex. Over Z/2 walks ignore
// orientation.
Decomposition decompose_flow(const GraphWindow& w, const Chain& f);

// Layers of pairwise vertex-disjoint circuits. Each layer is a maximal
// disjoint subset of what remains, scanned in input order. Returns indices.
std::vector<std::vector<int>> layered_circuit_decomposition(
    const std::vector<std::vector<VertexId>>& circuits);
// Largest number of other circuits a single circuit meets.
int max_intersection_degree(const std::vector<std::vector<VertexId>>& circuits);

// Orients each piece of a Z/2 decomposition of f; a unit Z cycle reducing to f.
Chain lift_z2_to_z(const GraphWindow& w, const Chain& f);

// psi <= phi: over Z, same sign and no larger magnitude on every edge; over
// Z/2, support containment.
bool dominated(const Chain& psi, const Chain& phi);

// Grows r inside phi until no inner vertex has a defect. Over Z every inner
// defect of r must be >= 0 (more inflow than outflow); over Z/2 odd inner
// vertices are repaired one at a time. Boundary vertices absorb defects.
Chain extend_ray(const GraphWindow& w, const Chain& phi, const Chain& r);

// Closes f (supported on edges inside U, defects on the vertex boundary of U)
// into a finitely supported cycle by adding flow on edges not inside U. The
// repair is a max-flow between opposite defects, so repair paths never share
// more than the needed capacity.
Chain finite_extension(const GraphWindow& w, const std::vector<bool>& inside,
                       const Chain& f);

}  // namespace ufh

#endif  // UFH_FLOW_HPP_
