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

#include "ufh/flow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "ufh/ends.hpp"
#include "ufh/maxflow.hpp"

namespace ufh {

Chain Decomposition::edge_sum() const {
  Chain out(1, ring);
  for (const auto& p : pieces) out += path_chain(p.vertices, ring);
  return out;
}

std::size_t Decomposition::count(PieceKind kind) const {
  return std::count_if(pieces.begin(), pieces.end(),
                       [&](const PathPiece& p) { return p.kind == kind; });
}

namespace {

// Remaining unit arcs of the flow being decomposed.
class ArcPool {
 public:
  ArcPool(std::size_t n, const Chain& f) : ring_(f.ring()), out_(n), in_(n, 0), out_count_(n, 0) {
    for (const auto& [e, c] : f.terms()) {
      if (ring_ == Ring::kZ2) {
        add(e[0], e[1], 1);
        add(e[1], e[0], 1);
      } else if (c > 0) {
        add(e[0], e[1], c);
      } else {
        add(e[1], e[0], -c);
      }
    }
  }

  // Takes the arc to the smallest available neighbour.
  std::optional<VertexId> take(VertexId v) {
    auto& m = out_[v];
    if (m.empty()) return std::nullopt;
    VertexId u = m.begin()->first;
    remove(v, u);
    if (ring_ == Ring::kZ2) remove(u, v);
    return u;
  }

  std::int64_t out(VertexId v) const { return out_count_[v]; }
  std::int64_t in(VertexId v) const { return in_[v]; }

 private:
  void add(VertexId a, VertexId b, std::int64_t c) {
    out_[a][b] += c;
    out_count_[a] += c;
    in_[b] += c;
  }
  void remove(VertexId a, VertexId b) {
    auto it = out_[a].find(b);
    if (--it->second == 0) out_[a].erase(it);
    --out_count_[a];
    --in_[b];
  }

  Ring ring_;
  std::vector<std::map<VertexId, std::int64_t>> out_;
  std::vector<std::int64_t> in_;
  std::vector<std::int64_t> out_count_;
};

class Walker {
 public:
  Walker(const GraphWindow& w, ArcPool& pool, Decomposition& out)
      : w_(w), pool_(pool), out_(out), pos_(w.num_vertices(), -1) {}

  // Follows arcs from s. When `to_boundary`, stops at the first boundary
  // vertex that can absorb the walk and records a window bip; otherwise runs
  // until the walk closes up at s with no arc left there.
  void walk(VertexId s, bool to_boundary) {
    path_ = {s};
    pos_[s] = 0;
    while (true) {
      const VertexId cur = path_.back();
      auto next = pool_.take(cur);
      if (!next) {
        if (!to_boundary && path_.size() == 1) break;
        throw std::logic_error("decompose_flow: walk stuck at vertex " +
                               std::to_string(cur));
      }
      const VertexId u = *next;
      if (pos_[u] >= 0) {
        PathPiece loop{PieceKind::kCircuit,
                       {path_.begin() + pos_[u], path_.end()}};
        loop.vertices.push_back(u);
        out_.pieces.push_back(std::move(loop));
        while (path_.back() != u) {
          pos_[path_.back()] = -1;
          path_.pop_back();
        }
        continue;
      }
      pos_[u] = static_cast<int>(path_.size());
      path_.push_back(u);
      if (to_boundary && w_.is_boundary(u) && absorbs(u)) {
        out_.pieces.push_back({PieceKind::kWindowBip, path_});
        break;
      }
    }
    for (VertexId v : path_) pos_[v] = -1;
    path_.clear();
  }

 private:
  // Called right after arriving at u.
  bool absorbs(VertexId u) const {
    if (out_.ring == Ring::kZ2) return pool_.out(u) % 2 == 0;
    return pool_.in(u) >= pool_.out(u);
  }

  const GraphWindow& w_;
  ArcPool& pool_;
  Decomposition& out_;
  std::vector<int> pos_;
  std::vector<VertexId> path_;
};

}  // namespace

Decomposition decompose_flow(const GraphWindow& w, const Chain& f) {
  if (!is_cycle(w, f)) throw PreconditionError("decompose_flow: input is not a cycle");
  Decomposition out;
  out.ring = f.ring();
  ArcPool pool(w.num_vertices(), f);
  Walker walker(w, pool, out);
  for (VertexId s : w.boundary_vertices()) {
    if (f.ring() == Ring::kZ2) {
      while (pool.out(s) % 2 == 1) walker.walk(s, true);
    } else {
      while (pool.out(s) > pool.in(s)) walker.walk(s, true);
    }
  }
  for (std::size_t v = 0; v < w.num_vertices(); ++v) {
    while (pool.out(static_cast<VertexId>(v)) > 0) {
      walker.walk(static_cast<VertexId>(v), false);
    }
  }
  if (out.edge_sum() != f) {
    throw std::logic_error("decompose_flow: pieces do not sum to the input");
  }
  std::map<std::pair<VertexId, VertexId>, int> cover;
  for (const auto& p : out.pieces) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      auto a = p.vertices[i], b = p.vertices[i + 1];
      out.multiplicity =
          std::max(out.multiplicity, ++cover[{std::min(a, b), std::max(a, b)}]);
    }
  }
  return out;
}

namespace {

bool intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::set<VertexId> sa(a.begin(), a.end());
  return std::any_of(b.begin(), b.end(), [&](VertexId v) { return sa.contains(v); });
}

}  // namespace

std::vector<std::vector<int>> layered_circuit_decomposition(
    const std::vector<std::vector<VertexId>>& circuits) {
  std::vector<int> remaining(circuits.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<std::vector<int>> layers;
  while (!remaining.empty()) {
    std::vector<int> layer, rest;
    std::set<VertexId> used;
    for (int i : remaining) {
      const auto& c = circuits[i];
      if (std::none_of(c.begin(), c.end(), [&](VertexId v) { return used.contains(v); })) {
        layer.push_back(i);
        used.insert(c.begin(), c.end());
      } else {
        rest.push_back(i);
      }
    }
    layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return layers;
}

int max_intersection_degree(const std::vector<std::vector<VertexId>>& circuits) {
  int best = 0;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && intersect(circuits[i], circuits[j])) ++deg;
    }
    best = std::max(best, deg);
  }
  return best;
}

Chain lift_z2_to_z(const GraphWindow& w, const Chain& f) {
  if (f.ring() != Ring::kZ2) throw PreconditionError("lift_z2_to_z: need a Z/2 chain");
  Decomposition d = decompose_flow(w, f);
  Chain out(1, Ring::kZ);
  for (const auto& p : d.pieces) out += path_chain(p.vertices, Ring::kZ);
  return out;
}

bool dominated(const Chain& psi, const Chain& phi) {
  if (psi.ring() != phi.ring() || psi.degree() != phi.degree()) return false;
  for (const auto& [s, c] : psi.terms()) {
    auto it = phi.terms().find(s);
    if (it == phi.terms().end()) return false;
    const std::int64_t p = it->second;
    if (psi.ring() == Ring::kZ) {
      if ((p > 0 && (c < 0 || c > p)) || (p < 0 && (c > 0 || c < p))) return false;
    }
  }
  return true;
}

Chain extend_ray(const GraphWindow& w, const Chain& phi, const Chain& r) {
  if (!dominated(r, phi)) throw PreconditionError("extend_ray: r is not dominated by phi");
  if (!is_cycle(w, phi)) throw PreconditionError("extend_ray: phi is not a cycle");
  const Ring ring = r.ring();
  Chain out = r;
  auto def = defects(w, out);
  std::set<VertexId> work;
  for (std::size_t v = 0; v < def.size(); ++v) {
    if (!w.is_inner(static_cast<VertexId>(v), 1) || def[v] == 0) continue;
    if (ring == Ring::kZ && def[v] < 0) {
      throw PreconditionError("extend_ray: negative defect at an inner vertex");
    }
    work.insert(static_cast<VertexId>(v));
  }
  while (!work.empty()) {
    const VertexId v = *work.begin();
    std::optional<VertexId> step;
    for (VertexId u : w.neighbors(v)) {
      const std::int64_t fp = phi.get({v, u}), fr = out.get({v, u});
      if (ring == Ring::kZ ? (fp > 0 && fp > fr) : (fp != 0 && fr == 0)) {
        step = u;
        break;
      }
    }
    if (!step) throw std::logic_error("extend_ray: no room left in phi");
    out.add({v, *step}, 1);
    if (ring == Ring::kZ) {
      if (--def[v] == 0) work.erase(v);
      ++def[*step];
    } else {
      def[v] = 0;
      work.erase(v);
      def[*step] ^= 1;
    }
    if (w.is_inner(*step, 1)) {
      if (def[*step] != 0) {
        work.insert(*step);
      } else {
        work.erase(*step);
      }
    }
  }
  return out;
}

Chain finite_extension(const GraphWindow& w, const std::vector<bool>& inside,
                       const Chain& f) {
  if (f.degree() != 1) throw PreconditionError("finite_extension: need a 1-chain");
  for (const auto& [e, c] : f.terms()) {
    if (!inside[e[0]] || !inside[e[1]]) {
      throw PreconditionError("finite_extension: f leaves U");
    }
  }
  auto def = defects(w, f);
  const auto rim = membership_mask(w, vertex_boundary(w, inside));
  std::int64_t total = 0;
  for (std::size_t v = 0; v < def.size(); ++v) {
    if (def[v] == 0) continue;
    if (!rim[v]) throw PreconditionError("finite_extension: defect inside U");
    total += def[v];
  }
  if (f.ring() == Ring::kZ ? total != 0 : total % 2 != 0) {
    throw PreconditionError("finite_extension: defects do not sum to zero");
  }
  if (total == 0 && std::all_of(def.begin(), def.end(), [](auto d) { return d == 0; })) {
    return f;
  }
  if (pseudo_end_count(w, inside) > 1) {
    throw PreconditionError("finite_extension: more than one pseudo-end outside U");
  }

  // Over Z/2 opposite signs are assigned alternately within each connected
  // piece of the exterior so that every piece is balanced.
  std::vector<std::int64_t> supply(def.begin(), def.end());
  if (f.ring() == Ring::kZ2) {
    std::vector<int> comp(w.num_vertices(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < w.num_vertices(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<VertexId> stack{static_cast<VertexId>(s)};
      comp[s] = ncomp;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : w.neighbors(v)) {
          if ((inside[v] && inside[u]) || comp[u] >= 0) continue;
          comp[u] = ncomp;
          stack.push_back(u);
        }
      }
      ++ncomp;
    }
    std::vector<int> parity(ncomp, 0);
    for (std::size_t v = 0; v < def.size(); ++v) {
      if (def[v] != 0) supply[v] = (parity[comp[v]]++ % 2 == 0) ? 1 : -1;
    }
  }

  std::int64_t demand = 0;
  for (auto s : supply) demand += std::max<std::int64_t>(s, 0);
  const int n = static_cast<int>(w.num_vertices());
  for (std::int64_t cap = 1;; cap *= 2) {
    FlowNetwork net(n + 2);
    std::vector<std::pair<int, int>> arcs;  // forward, backward per edge
    std::vector<EdgeId> edge_of;
    for (std::size_t e = 0; e < w.num_edges(); ++e) {
      const Edge& ed = w.edge(static_cast<EdgeId>(e));
      if (inside[ed.u] && inside[ed.v]) continue;
      arcs.emplace_back(net.add_arc(ed.u, ed.v, cap), net.add_arc(ed.v, ed.u, cap));
      edge_of.push_back(static_cast<EdgeId>(e));
    }
    for (int v = 0; v < n; ++v) {
      if (supply[v] > 0) net.add_arc(n, v, supply[v]);
      if (supply[v] < 0) net.add_arc(v, n + 1, -supply[v]);
    }
    if (net.solve(n, n + 1) == demand) {
      Chain out = f;
      Chain repair(1, Ring::kZ);
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Edge& ed = w.edge(edge_of[i]);
        repair.add({ed.u, ed.v}, net.flow(arcs[i].first) - net.flow(arcs[i].second));
      }
      out += f.ring() == Ring::kZ ? repair : reduce_mod2(repair);
      if (!is_cycle(w, out, 0)) throw std::logic_error("finite_extension: repair failed");
      return out;
    }
    if (cap >= demand) break;
  }
  throw PreconditionError("finite_extension: defects cannot be joined outside U");
}

}  // namespace ufh
