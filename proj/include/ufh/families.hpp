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

// Standard infinite ULF graph families and the windows cut out of them.

#ifndef UFH_FAMILIES_HPP_
#define UFH_FAMILIES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ufh/graph.hpp"

namespace ufh {

// A branching point of depth n >= 1. Depth-1 points sit on the spine at a
// nonzero signed position; deeper points sit on the ray of a branching point
// of the previous depth (`parent` indexes that depth's list) at position >= 1.
struct BranchPoint {
  int parent = -1;
  std::int64_t position = 0;
  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

// depths[0] = B_1, depths[1] = B_2, ...
struct TreeSpec {
  std::vector<std::vector<BranchPoint>> depths;
  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;
};

// Ray bookkeeping shared by the tree family and the bip construction.
// Ray 0 is the spine (two half rays glued at the origin); every branching
// point owns one ray. Vertex keys are {ray, position}, with spine positions
// signed and ray positions >= 1 (position 0 is the branching point itself).
struct TreeLayout {
  struct Ray {
    int depth = 0;           // depth of the branching point (0 for spine)
    int index = 0;           // index inside TreeSpec::depths[depth - 1]
    VertexKey root;          // key of the branching point on the parent ray
    int parent_ray = -1;
  };
  std::vector<Ray> rays;
  // rays_at_depth[n] lists the ray ids created by B_n (n >= 1).
  std::vector<std::vector<int>> rays_at_depth;

  // Validates `spec` restricted to its first `max_depth` branching levels.
  // With `ray_len` > 0 every position must lie strictly inside its truncated
  // ray.
  static TreeLayout make(const TreeSpec& spec, int max_depth,
                         std::int64_t ray_len);

  // Ray ids whose branching point is the vertex `key`.
  std::vector<int> rays_rooted_at(const VertexKey& key) const;
  int ray_of(int depth, int index) const;
};

namespace family {
struct Grid2d {
  bool triangulated = false;
};
// The k-regular tree, i.e. the Cayley graph of the free product of k copies
// of Z/2 (for even k, also the free group of rank k/2).
struct CayleyFree {
  int k = 3;
};
struct BiinfiniteLine {};
struct BiinfiniteComb {};
struct Cycle {
  int n = 3;
};
// Finite chain of circuits with strictly increasing even lengths; circuit i
// is joined to circuit i + 1 by one bridge edge.
struct GrowingCircuitChain {
  std::vector<int> lengths;
};
struct TrivalentTree {
  TreeSpec tree;
};
struct Ladder {};
}  // namespace family

using FamilySpec =
    std::variant<family::Grid2d, family::CayleyFree, family::BiinfiniteLine,
                 family::BiinfiniteComb, family::Cycle,
                 family::GrowingCircuitChain, family::TrivalentTree,
                 family::Ladder>;

// Neighbourhood oracle of an infinite (or finite) family.
class Family {
 public:
  virtual ~Family() = default;
  virtual std::string tag() const = 0;
  virtual int degree_bound() const = 0;
  virtual VertexKey default_seed() const = 0;
  virtual bool contains(const VertexKey& key) const = 0;
  // Sorted by key.
  virtual std::vector<VertexKey> neighbors(const VertexKey& key) const = 0;
  virtual bool connected() const { return true; }
  virtual std::string label(const VertexKey& key) const;
};

std::unique_ptr<Family> make_family(const FamilySpec& spec);
std::string family_tag(const FamilySpec& spec);

// Ball of the given radius around `center` (default: the family's seed) in
// the infinite graph, with boundary vertices marked. Vertex ids follow BFS
// order from the center, so the center is vertex 0.
GraphWindow build_window(const FamilySpec& spec,
                         const std::optional<VertexKey>& center, int radius);

}  // namespace ufh

#endif  // UFH_FAMILIES_HPP_
