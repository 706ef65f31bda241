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

#ifndef UFH_GRAPH_HPP_
#define UFH_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ufh {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Coordinates of a vertex in its generating family. Families choose their own
// encoding (grid: {x, y}; free product: the reduced word; ...).
using VertexKey = std::vector<std::int64_t>;

inline constexpr int kUnreachable = -1;

// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a configurable resource cap (circuit count, search nodes) is hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge stored with its fixed orientation u -> v, where u < v.
struct Edge {
  VertexId u;
  VertexId v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A finite induced piece of a (possibly infinite) uniformly locally finite
// graph. Immutable after construction.
//
// Boundary vertices are those whose neighbourhood in the ambient graph is not
// fully present. Every notion of "inner region" is expressed through
// boundary_distance(): a vertex is inner at margin m when it is at distance
// >= m from every boundary vertex (margin 1 == not a boundary vertex).
class GraphWindow {
 public:
  struct Builder {
    std::vector<VertexKey> keys;
    std::vector<std::string> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<bool> boundary;
    int degree_bound = 0;
    int radius = 0;
    VertexId center = 0;
    std::string family_tag;
  };

  explicit GraphWindow(Builder b);

  std::size_t num_vertices() const { return keys_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }
  int max_degree() const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  // Throws PreconditionError when {a, b} is not an edge.
  EdgeId edge_id(VertexId a, VertexId b) const;

  bool is_boundary(VertexId v) const { return boundary_[v]; }
  const std::vector<VertexId>& boundary_vertices() const {
    return boundary_list_;
  }
  // Distance to the nearest boundary vertex; a large sentinel when the window
  // has no boundary (the whole finite graph is present).
  int boundary_distance(VertexId v) const { return boundary_dist_[v]; }
  bool is_inner(VertexId v, int margin) const {
    return boundary_dist_[v] >= margin;
  }

  const VertexKey& key(VertexId v) const { return keys_[v]; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(const VertexKey& key) const;
  VertexId at(const VertexKey& key) const;

  int degree_bound() const { return degree_bound_; }
  int radius() const { return radius_; }
  VertexId center() const { return center_; }
  const std::string& family_tag() const { return family_tag_; }

  bool is_connected() const;
  bool is_tree() const;

 private:
  std::vector<VertexKey> keys_;
  std::vector<std::string> labels_;
  std::map<VertexKey, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_index_;
  std::vector<bool> boundary_;
  std::vector<VertexId> boundary_list_;
  std::vector<int> boundary_dist_;
  int degree_bound_;
  int radius_;
  VertexId center_;
  std::string family_tag_;
};

// Breadth-first distances from `source`; kUnreachable for other components.
// `limit` < 0 means unbounded.
std::vector<int> bfs_distances(const GraphWindow& w, VertexId source,
                               int limit = -1);

// Graph metric inside the window, kUnreachable for disconnected pairs.
int distance(const GraphWindow& w, VertexId u, VertexId v);

// Edges with exactly one endpoint in `subset` (given as a membership mask).
std::vector<EdgeId> edge_boundary(const GraphWindow& w,
                                  const std::vector<bool>& subset);
std::vector<EdgeId> edge_boundary(const GraphWindow& w,
                                  std::span<const VertexId> subset);

// Vertices of `subset` adjacent to a vertex outside it.
std::vector<VertexId> vertex_boundary(const GraphWindow& w,
                                      const std::vector<bool>& subset);

std::vector<bool> membership_mask(const GraphWindow& w,
                                  std::span<const VertexId> subset);

// Vertices at distance <= r from `center`.
std::vector<VertexId> ball(const GraphWindow& w, VertexId center, int r);

// Connected components of the subgraph induced on vertices with mask[v] true,
// each sorted, listed in order of their smallest vertex.
std::vector<std::vector<VertexId>> components(const GraphWindow& w,
                                              const std::vector<bool>& mask);

// Replaces every vertex of degree d > 3 by a path of d - 2 vertices; the two
// path ends each take two of the original incident edges and every interior
// path vertex takes one (neighbours distributed in increasing id order).
// Returns the unfolded tree together with, for each original vertex, the
// vertex representing it (the first path vertex for unfolded stars).
struct CombUnfolding {
  GraphWindow tree;
  std::vector<VertexId> image;
};
CombUnfolding star_to_comb(const GraphWindow& tree);

}  // namespace ufh

#endif  // UFH_GRAPH_HPP_
