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

#ifndef UFH_RIPS_HPP_
#define UFH_RIPS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ufh/chain.hpp"
#include "ufh/graph.hpp"

namespace ufh {

// Radius-r Rips complex of a window: virtual edges join vertices at distance
// <= r, virtual triangles are triples with pairwise distance <= r.
class RipsComplex {
 public:
  RipsComplex(const GraphWindow& base, int radius);

  const GraphWindow& base() const { return *base_; }
  int radius() const { return radius_; }

  // Window distance when it is <= radius, kUnreachable otherwise.
  int dist(VertexId u, VertexId v) const;
  bool is_edge(VertexId u, VertexId v) const;
  bool is_triangle(VertexId a, VertexId b, VertexId c) const;

  // Vertices within distance radius of v (excluding v), with distances,
  // sorted by id.
  const std::vector<std::pair<VertexId, int>>& near(VertexId v) const {
    return near_[v];
  }

  // All virtual edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  // All virtual triangles a < b < c, sorted.
  std::vector<std::array<VertexId, 3>> triangles() const;
  // Triangles having at least two vertices in the mask.
  std::vector<std::array<VertexId, 3>> triangles_touching(
      const std::vector<bool>& mask) const;

  // The fixed shortest path from u to v: for u < v the lexicographically
  // smallest shortest vertex sequence, for u > v the reverse of path(v, u).
  std::vector<VertexId> path(VertexId u, VertexId v) const;

 private:
  const GraphWindow* base_;
  int radius_;
  std::vector<std::vector<std::pair<VertexId, int>>> near_;
};

// Fan triangulation sum_{i=2}^{s-1} (v1, vi, v_{i+1}) of the closed walk
// v1 -> ... -> vs -> v1, together with the Rips radius it needs.
struct Triangulation {
  Chain chain;
  int radius = 0;
};
Triangulation triangulate_circuit(std::span<const VertexId> cycle, Ring ring);

// Degree-2 Rips radius needed by the fan of a circuit of length s.
int fan_radius(std::size_t s);

// Each triangle (u, v, w) of g becomes the closed walk
// p_{u,v} p_{v,w} p_{w,u} carrying g's coefficient.
struct WeightedCircuit {
  std::vector<VertexId> walk;  // closed: walk.front() == walk.back()
  std::int64_t coeff = 0;
};
std::vector<WeightedCircuit> circuits_from_2chain(const RipsComplex& rips,
                                                  const Chain& g);
// Sum of the oriented edge chains of the circuits.
Chain edge_sum(const std::vector<WeightedCircuit>& circuits, Ring ring);

// Replaces each virtual edge by its fixed path. Returns the base cycle and a
// 2-chain whose boundary is f - traced.
struct TracedCycle {
  Chain traced;
  Chain witness;
};
TracedCycle trace_virtual_edges(const RipsComplex& rips, const Chain& f);

}  // namespace ufh

#endif  // UFH_RIPS_HPP_
