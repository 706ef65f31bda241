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

#include "ufh/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace ufh {

namespace {

constexpr int kNoBoundary = std::numeric_limits<int>::max() / 4;

}  // namespace

GraphWindow::GraphWindow(Builder b)
    : keys_(std::move(b.keys)),
      labels_(std::move(b.labels)),
      adj_(keys_.size()),
      boundary_(std::move(b.boundary)),
      degree_bound_(b.degree_bound),
      radius_(b.radius),
      center_(b.center),
      family_tag_(std::move(b.family_tag)) {
  const auto n = keys_.size();
  if (labels_.size() != n || boundary_.size() != n) {
    throw PreconditionError("GraphWindow: inconsistent vertex arrays");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!index_.emplace(keys_[v], static_cast<VertexId>(v)).second) {
      throw PreconditionError("GraphWindow: duplicate vertex key");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(b.edges.size());
  for (auto [a, c] : b.edges) {
    if (a == c || a < 0 || c < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(c) >= n) {
      throw PreconditionError("GraphWindow: invalid edge");
    }
    edges.push_back(Edge{std::min(a, c), std::max(a, c)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    edge_index_.emplace(std::pair{edges_[e].u, edges_[e].v},
                        static_cast<EdgeId>(e));
    adj_[edges_[e].u].push_back(edges_[e].v);
    adj_[edges_[e].v].push_back(edges_[e].u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  for (std::size_t v = 0; v < n; ++v) {
    if (boundary_[v]) boundary_list_.push_back(static_cast<VertexId>(v));
  }
  boundary_dist_.assign(n, kNoBoundary);
  std::deque<VertexId> queue;
  for (VertexId v : boundary_list_) {
    boundary_dist_[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : adj_[v]) {
      if (boundary_dist_[u] == kNoBoundary) {
        boundary_dist_[u] = boundary_dist_[v] + 1;
        queue.push_back(u);
      }
    }
  }
}

int GraphWindow::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

std::optional<EdgeId> GraphWindow::find_edge(VertexId a, VertexId b) const {
  auto it = edge_index_.find({std::min(a, b), std::max(a, b)});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

EdgeId GraphWindow::edge_id(VertexId a, VertexId b) const {
  auto e = find_edge(a, b);
  if (!e) {
    throw PreconditionError("no edge between " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
  return *e;
}

std::optional<VertexId> GraphWindow::find(const VertexKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId GraphWindow::at(const VertexKey& key) const {
  auto v = find(key);
  if (!v) throw PreconditionError("vertex not in window");
  return *v;
}

bool GraphWindow::is_connected() const {
  if (num_vertices() == 0) return true;
  auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

bool GraphWindow::is_tree() const {
  return num_vertices() > 0 && num_edges() + 1 == num_vertices() &&
         is_connected();
}

std::vector<int> bfs_distances(const GraphWindow& w, VertexId source,
                               int limit) {
  std::vector<int> dist(w.num_vertices(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (limit >= 0 && dist[v] >= limit) continue;
    for (VertexId u : w.neighbors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

int distance(const GraphWindow& w, VertexId u, VertexId v) {
  if (u == v) return 0;
  return bfs_distances(w, u)[v];
}

std::vector<bool> membership_mask(const GraphWindow& w,
                                  std::span<const VertexId> subset) {
  std::vector<bool> mask(w.num_vertices(), false);
  for (VertexId v : subset) mask[v] = true;
  return mask;
}

std::vector<EdgeId> edge_boundary(const GraphWindow& w,
                                  const std::vector<bool>& subset) {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < w.num_edges(); ++e) {
    const Edge& edge = w.edge(static_cast<EdgeId>(e));
    if (subset[edge.u] != subset[edge.v]) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

std::vector<EdgeId> edge_boundary(const GraphWindow& w,
                                  std::span<const VertexId> subset) {
  return edge_boundary(w, membership_mask(w, subset));
}

std::vector<VertexId> vertex_boundary(const GraphWindow& w,
                                      const std::vector<bool>& subset) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < w.num_vertices(); ++v) {
    if (!subset[v]) continue;
    auto nbrs = w.neighbors(static_cast<VertexId>(v));
    if (std::any_of(nbrs.begin(), nbrs.end(),
                    [&](VertexId u) { return !subset[u]; })) {
      out.push_back(static_cast<VertexId>(v));
    }
  }
  return out;
}

std::vector<VertexId> ball(const GraphWindow& w, VertexId center, int r) {
  auto dist = bfs_distances(w, center, r);
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreachable && dist[v] <= r) {
      out.push_back(static_cast<VertexId>(v));
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> components(const GraphWindow& w,
                                              const std::vector<bool>& mask) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(w.num_vertices(), false);
  for (std::size_t s = 0; s < w.num_vertices(); ++s) {
    if (!mask[s] || seen[s]) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{static_cast<VertexId>(s)};
    seen[s] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (VertexId u : w.neighbors(v)) {
        if (mask[u] && !seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

CombUnfolding star_to_comb(const GraphWindow& tree) {
  if (!tree.is_tree()) throw PreconditionError("star_to_comb: input not a tree");

  GraphWindow::Builder b;
  b.degree_bound = 3;
  b.radius = tree.radius();
  b.family_tag = tree.family_tag() + "|comb";
  std::vector<VertexId> image(tree.num_vertices());
  // For each original vertex, the new vertex that carries each incident edge.
  std::vector<std::map<VertexId, VertexId>> carrier(tree.num_vertices());

  auto add_vertex = [&](VertexId original, std::int64_t slot) {
    VertexKey key = tree.key(original);
    key.push_back(slot);
    b.keys.push_back(std::move(key));
    b.labels.push_back(tree.label(original) +
                       (slot == 0 ? "" : "#" + std::to_string(slot)));
    b.boundary.push_back(tree.is_boundary(original));
    return static_cast<VertexId>(b.keys.size() - 1);
  };

  for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
    const auto vid = static_cast<VertexId>(v);
    auto nbrs = tree.neighbors(vid);
    const std::size_t d = nbrs.size();
    if (d <= 3) {
      VertexId nv = add_vertex(vid, 0);
      image[v] = nv;
      for (VertexId u : nbrs) carrier[v][u] = nv;
      continue;
    }
    std::vector<VertexId> path;
    for (std::size_t i = 0; i + 2 < d; ++i) {
      path.push_back(add_vertex(vid, static_cast<std::int64_t>(i)));
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      b.edges.emplace_back(path[i], path[i + 1]);
    }
    image[v] = path.front();
    // Two neighbours at each extremity, one per interior path vertex.
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t slot;
      if (i < 2) {
        slot = 0;
      } else if (i >= d - 2) {
        slot = path.size() - 1;
      } else {
        slot = i - 1;
      }
      carrier[v][nbrs[i]] = path[slot];
    }
  }
  for (const Edge& e : tree.edges()) {
    b.edges.emplace_back(carrier[e.u].at(e.v), carrier[e.v].at(e.u));
  }
  b.center = image[tree.center()];
  return CombUnfolding{GraphWindow(std::move(b)), std::move(image)};
}

}  // namespace ufh
