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

#include "ufh/ends.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "ufh/flow.hpp"

namespace ufh {

namespace {

std::vector<bool> complement(const std::vector<bool>& mask) {
  std::vector<bool> out(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) out[i] = !mask[i];
  return out;
}

bool touches_boundary(const GraphWindow& w, const std::vector<VertexId>& comp) {
  return std::any_of(comp.begin(), comp.end(),
                     [&](VertexId v) { return w.is_boundary(v); });
}

// Component label of each vertex of w - K, -1 on K.
std::vector<int> label_components(const std::vector<std::vector<VertexId>>& comps,
                                  std::size_t n) {
  std::vector<int> label(n, -1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (VertexId v : comps[i]) label[v] = static_cast<int>(i);
  }
  return label;
}

std::vector<std::vector<VertexId>> tree_adjacency(const GraphWindow& w,
                                                  const std::vector<EdgeId>& edges) {
  std::vector<std::vector<VertexId>> adj(w.num_vertices());
  for (EdgeId e : edges) {
    adj[w.edge(e).u].push_back(w.edge(e).v);
    adj[w.edge(e).v].push_back(w.edge(e).u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// BFS path from `from` to the first vertex satisfying `target`, moving only
// through vertices accepted by `allowed`. Empty when unreachable.
template <class Allowed, class Target>
std::vector<VertexId> bfs_path(const std::vector<std::vector<VertexId>>& adj,
                               VertexId from, Allowed allowed, Target target) {
  std::vector<VertexId> parent(adj.size(), -2);
  std::deque<VertexId> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (target(v)) {
      std::vector<VertexId> path;
      for (VertexId x = v; x != -1; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (VertexId u : adj[v]) {
      if (parent[u] == -2 && allowed(u)) {
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  return {};
}

std::vector<std::vector<VertexId>> window_adjacency(const GraphWindow& w) {
  std::vector<std::vector<VertexId>> adj(w.num_vertices());
  for (std::size_t v = 0; v < w.num_vertices(); ++v) {
    auto nb = w.neighbors(static_cast<VertexId>(v));
    adj[v].assign(nb.begin(), nb.end());
  }
  return adj;
}

}  // namespace

EndPartition end_partition(const GraphWindow& w, const std::vector<bool>& K) {
  std::vector<VertexId> members;
  for (std::size_t v = 0; v < K.size(); ++v) {
    if (!K[v]) continue;
    if (w.is_boundary(static_cast<VertexId>(v))) {
      throw PreconditionError("end_partition: K touches the window boundary");
    }
    members.push_back(static_cast<VertexId>(v));
  }
  if (members.empty()) throw PreconditionError("end_partition: K is empty");
  if (components(w, K).size() != 1) {
    throw PreconditionError("end_partition: K is not connected");
  }
  EndPartition out;
  for (auto& comp : components(w, complement(K))) {
    (touches_boundary(w, comp) ? out.pseudo_ends : out.finite).push_back(std::move(comp));
  }
  return out;
}

int pseudo_end_count(const GraphWindow& w, const std::vector<bool>& K) {
  int count = 0;
  for (const auto& comp : components(w, complement(K))) {
    if (touches_boundary(w, comp)) ++count;
  }
  return count;
}

bool separator_bijection(const GraphWindow& w, const std::vector<EdgeId>& tree_edges,
                         const std::vector<bool>& K) {
  // T n K must be nonempty and connected along tree edges.
  auto adj = tree_adjacency(w, tree_edges);
  std::vector<VertexId> tk;
  std::vector<bool> on_tree(w.num_vertices(), false);
  for (EdgeId e : tree_edges) on_tree[w.edge(e).u] = on_tree[w.edge(e).v] = true;
  if (tree_edges.empty()) on_tree[w.center()] = true;
  for (std::size_t v = 0; v < K.size(); ++v) {
    if (K[v] && on_tree[v]) tk.push_back(static_cast<VertexId>(v));
  }
  if (tk.empty()) return false;
  std::vector<bool> seen(w.num_vertices(), false);
  {
    std::deque<VertexId> queue{tk.front()};
    seen[tk.front()] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : adj[v]) {
        if (!seen[u] && K[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  for (VertexId v : tk) {
    if (!seen[v]) return false;
  }

  auto comps = components(w, complement(K));
  auto label = label_components(comps, w.num_vertices());
  std::vector<int> hits(comps.size(), 0);
  for (EdgeId e : tree_edges) {
    const Edge& ed = w.edge(e);
    if (K[ed.u] == K[ed.v]) continue;
    const VertexId outside = K[ed.u] ? ed.v : ed.u;
    ++hits[label[outside]];
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const bool pseudo = touches_boundary(w, comps[i]);
    if (pseudo ? hits[i] != 1 : hits[i] != 0) return false;
  }
  return true;
}

EndDefiningTree end_defining_tree(const GraphWindow& w) {
  if (!w.is_connected()) throw PreconditionError("end_defining_tree: window is disconnected");
  const VertexId c = w.center();
  const auto dist = bfs_distances(w, c);
  int boundary_dist = std::numeric_limits<int>::max();
  for (VertexId b : w.boundary_vertices()) boundary_dist = std::min(boundary_dist, dist[b]);
  const auto adj = window_adjacency(w);

  EndDefiningTree out;
  out.in_tree.assign(w.num_vertices(), false);
  out.in_tree[c] = true;
  std::set<EdgeId> edges;
  auto add_path = [&](const std::vector<VertexId>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      edges.insert(w.edge_id(path[i], path[i + 1]));
      out.in_tree[path[i]] = out.in_tree[path[i + 1]] = true;
    }
  };
  if (w.boundary_vertices().empty()) return out;

  // Branch tips: tree vertices just outside the current ball, one per
  // pseudo-end of the complement.
  std::vector<VertexId> tips{c};
  bool ok = true;
  // The complement of the last separator keeps an annulus of width >= 2; a
  // one-vertex-wide sphere splits into isolated vertices in most families.
  for (int radius = 0; radius < boundary_dist - 1; ++radius) {
    std::vector<bool> K(w.num_vertices());
    for (std::size_t v = 0; v < K.size(); ++v) K[v] = dist[v] <= radius;
    auto comps = components(w, complement(K));
    auto label = label_components(comps, w.num_vertices());
    std::vector<VertexId> next_tips;
    std::vector<bool> claimed(comps.size(), false);
    for (VertexId tip : tips) {
      // Tips sit on the sphere of this radius; the part of the sphere reachable
      // from a tip lies in the tip's old component.
      std::vector<VertexId> parent(w.num_vertices(), -2), order;
      std::deque<VertexId> queue{tip};
      parent[tip] = -1;
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (VertexId u : adj[v]) {
          if (parent[u] == -2 && K[u] && dist[u] == radius) {
            parent[u] = v;
            queue.push_back(u);
          }
        }
      }
      for (VertexId v : order) {
        for (VertexId u : adj[v]) {
          if (K[u]) continue;
          const int l = label[u];
          if (claimed[l] || !touches_boundary(w, comps[l])) continue;
          claimed[l] = true;
          std::vector<VertexId> path{u};
          for (VertexId x = v; x != -1; x = parent[x]) path.push_back(x);
          std::reverse(path.begin(), path.end());
          add_path(path);
          next_tips.push_back(u);
        }
      }
    }
    for (std::size_t l = 0; l < comps.size(); ++l) {
      if (!claimed[l] && touches_boundary(w, comps[l])) ok = false;
    }
    tips = std::move(next_tips);
    std::sort(tips.begin(), tips.end());
    out.separator_radii.push_back(radius);
  }
  // Final branches run to the nearest window boundary vertex.
  for (VertexId tip : tips) {
    auto path = bfs_path(
        adj, tip, [&](VertexId v) { return dist[v] > dist[tip] - 1; },
        [&](VertexId v) { return w.is_boundary(v); });
    if (path.empty()) {
      ok = false;
      continue;
    }
    add_path(path);
    out.tips.push_back(path.back());
  }
  out.edges.assign(edges.begin(), edges.end());
  for (int radius : out.separator_radii) {
    std::vector<bool> K(w.num_vertices());
    for (std::size_t v = 0; v < K.size(); ++v) K[v] = dist[v] <= radius;
    out.bijection_ok.push_back(ok && separator_bijection(w, out.edges, K));
  }
  return out;
}

PushResult push_to_tree_z2(const GraphWindow& w, const Chain& f,
                           const EndDefiningTree& tree, int margin) {
  if (f.ring() != Ring::kZ2) throw PreconditionError("push_to_tree_z2: need a Z/2 chain");
  PushResult out{{}, f};
  const Decomposition d = decompose_flow(w, f);
  const auto adj = window_adjacency(w);
  const auto tadj = tree_adjacency(w, tree.edges);
  auto rim = [&](VertexId v) { return !w.is_inner(v, margin); };
  auto to_tree = [&](VertexId s) {
    auto path = bfs_path(adj, s, rim, [&](VertexId v) { return tree.in_tree[v]; });
    if (path.empty()) {
      throw PreconditionError("push_to_tree_z2: bip end has no tree branch in reach");
    }
    return path;
  };
  for (const auto& piece : d.pieces) {
    if (piece.kind == PieceKind::kCircuit) {
      out.circuits.push_back(piece.vertices);
      out.residue += path_chain(piece.vertices, Ring::kZ2);
      continue;
    }
    // Close the bip: rim to the tree, along the tree, rim back.
    const VertexId s = piece.vertices.front(), t = piece.vertices.back();
    auto ps = to_tree(s), pt = to_tree(t);
    auto along = bfs_path(
        tadj, pt.back(), [](VertexId) { return true; },
        [&](VertexId v) { return v == ps.back(); });
    if (along.empty()) throw std::logic_error("push_to_tree_z2: tree is disconnected");
    Chain loop = path_chain(piece.vertices, Ring::kZ2) + path_chain(pt, Ring::kZ2) +
                 path_chain(along, Ring::kZ2) + path_chain(ps, Ring::kZ2);
    if (loop.is_zero()) continue;
    const Decomposition closing = decompose_flow(w, loop);
    for (const auto& c : closing.pieces) {
      out.circuits.push_back(c.vertices);
      out.residue += path_chain(c.vertices, Ring::kZ2);
    }
  }
  return out;
}

}  // namespace ufh
