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

#include "ufh/rips.hpp"

#include <algorithm>

namespace ufh {

RipsComplex::RipsComplex(const GraphWindow& base, int radius)
    : base_(&base), radius_(radius), near_(base.num_vertices()) {
  if (radius < 1) throw PreconditionError("Rips radius must be >= 1");
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    auto d = bfs_distances(base, static_cast<VertexId>(v), radius);
    for (std::size_t u = 0; u < d.size(); ++u) {
      if (u != v && d[u] != kUnreachable && d[u] <= radius) {
        near_[v].emplace_back(static_cast<VertexId>(u), d[u]);
      }
    }
  }
}

int RipsComplex::dist(VertexId u, VertexId v) const {
  if (u == v) return 0;
  const auto& list = near_[u];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const std::pair<VertexId, int>& a, VertexId b) { return a.first < b; });
  if (it == list.end() || it->first != v) return kUnreachable;
  return it->second;
}

bool RipsComplex::is_edge(VertexId u, VertexId v) const {
  return u != v && dist(u, v) != kUnreachable;
}

bool RipsComplex::is_triangle(VertexId a, VertexId b, VertexId c) const {
  return is_edge(a, b) && is_edge(b, c) && is_edge(a, c);
}

std::vector<Edge> RipsComplex::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < near_.size(); ++u) {
    for (auto [v, d] : near_[u]) {
      if (static_cast<VertexId>(u) < v) out.push_back({static_cast<VertexId>(u), v});
    }
  }
  return out;
}

std::vector<std::array<VertexId, 3>> RipsComplex::triangles() const {
  return triangles_touching(std::vector<bool>(near_.size(), true));
}

std::vector<std::array<VertexId, 3>> RipsComplex::triangles_touching(
    const std::vector<bool>& mask) const {
  std::vector<std::array<VertexId, 3>> out;
  for (std::size_t a = 0; a < near_.size(); ++a) {
    const auto va = static_cast<VertexId>(a);
    for (auto [b, db] : near_[a]) {
      if (b <= va) continue;
      for (auto [c, dc] : near_[b]) {
        if (c <= b || !is_edge(va, c)) continue;
        const int inside = mask[a] + mask[b] + mask[c];
        if (inside >= 2) out.push_back({va, b, c});
      }
    }
  }
  return out;
}

std::vector<VertexId> RipsComplex::path(VertexId u, VertexId v) const {
  if (u > v) {
    auto p = path(v, u);
    std::reverse(p.begin(), p.end());
    return p;
  }
  const int d = dist(u, v);
  if (d == kUnreachable) throw PreconditionError("path: not a virtual edge");
  std::vector<VertexId> out{u};
  VertexId cur = u;
  for (int left = d; left > 0; --left) {
    // Neighbours are sorted, so the first one closer to v is the
    // lexicographically smallest continuation.
    for (VertexId x : base_->neighbors(cur)) {
      const int dx = x == v ? 0 : dist(x, v);
      if (dx == left - 1) {
        cur = x;
        break;
      }
    }
    out.push_back(cur);
  }
  return out;
}

int fan_radius(std::size_t s) { return static_cast<int>((s + 1) / 2); }

Triangulation triangulate_circuit(std::span<const VertexId> cycle, Ring ring) {
  const std::size_t s = cycle.size();
  if (s < 3) throw PreconditionError("triangulate_circuit: length < 3");
  Triangulation out{Chain(2, ring), fan_radius(s)};
  for (std::size_t i = 1; i + 1 < s; ++i) {
    out.chain.add({cycle[0], cycle[i], cycle[i + 1]}, 1);
  }
  return out;
}

std::vector<WeightedCircuit> circuits_from_2chain(const RipsComplex& rips,
                                                  const Chain& g) {
  if (g.degree() != 2) throw PreconditionError("circuits_from_2chain: need 2-chain");
  std::vector<WeightedCircuit> out;
  for (const auto& [t, coeff] : g.terms()) {
    if (!rips.is_triangle(t[0], t[1], t[2])) {
      throw PreconditionError("circuits_from_2chain: not a Rips triangle");
    }
    WeightedCircuit wc;
    wc.coeff = coeff;
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]},
                        std::pair{t[2], t[0]}}) {
      auto p = rips.path(a, b);
      if (wc.walk.empty()) {
        wc.walk = p;
      } else {
        wc.walk.insert(wc.walk.end(), p.begin() + 1, p.end());
      }
    }
    out.push_back(std::move(wc));
  }
  return out;
}

Chain edge_sum(const std::vector<WeightedCircuit>& circuits, Ring ring) {
  Chain out(1, ring);
  for (const auto& wc : circuits) {
    out += wc.coeff * path_chain(wc.walk, ring);
  }
  return out;
}

TracedCycle trace_virtual_edges(const RipsComplex& rips, const Chain& f) {
  if (f.degree() != 1) throw PreconditionError("trace_virtual_edges: need 1-chain");
  if (!is_cycle(rips.base(), f)) {
    throw PreconditionError("trace_virtual_edges: input is not a cycle");
  }
  TracedCycle out{Chain(1, f.ring()), Chain(2, f.ring())};
  for (const auto& [e, coeff] : f.terms()) {
    if (!rips.is_edge(e[0], e[1])) {
      throw PreconditionError("trace_virtual_edges: not a Rips edge");
    }
    auto p = rips.path(e[0], e[1]);
    out.traced += coeff * path_chain(p, f.ring());
    // Delta(u, v) = sum (u, p_i, p_{i+1}) has boundary p_{u,v} - (u, v).
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      out.witness.add({p[0], p[i], p[i + 1]}, -coeff);
    }
  }
  return out;
}

}  // namespace ufh
