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

#include "ufh/families.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace ufh {

TreeLayout TreeLayout::make(const TreeSpec& spec, int max_depth,
                            std::int64_t ray_len) {
  TreeLayout layout;
  layout.rays.push_back(Ray{0, 0, VertexKey{0, 0}, -1});
  layout.rays_at_depth.emplace_back();
  std::set<VertexKey> roots;
  const int levels =
      std::min<int>(max_depth, static_cast<int>(spec.depths.size()));
  for (int n = 1; n <= levels; ++n) {
    layout.rays_at_depth.emplace_back();
    const auto& points = spec.depths[n - 1];
    for (std::size_t i = 0; i < points.size(); ++i) {
      const BranchPoint& bp = points[i];
      Ray ray;
      ray.depth = n;
      ray.index = static_cast<int>(i);
      if (n == 1) {
        if (bp.position == 0) {
          throw PreconditionError("depth-1 branching point at the origin");
        }
        if (ray_len > 0 && (bp.position >= ray_len || -bp.position >= ray_len)) {
          throw PreconditionError("depth-1 branching point beyond spine");
        }
        ray.parent_ray = 0;
        ray.root = VertexKey{0, bp.position};
      } else {
        const auto& prev = spec.depths[n - 2];
        if (bp.parent < 0 || static_cast<std::size_t>(bp.parent) >= prev.size()) {
          throw PreconditionError("branching point with invalid parent");
        }
        if (bp.position < 1 || (ray_len > 0 && bp.position >= ray_len)) {
          throw PreconditionError("branching point off its parent ray");
        }
        ray.parent_ray = layout.rays_at_depth[n - 1][bp.parent];
        ray.root = VertexKey{ray.parent_ray, bp.position};
      }
      if (!roots.insert(ray.root).second) {
        throw PreconditionError("two branches at the same vertex");
      }
      layout.rays_at_depth[n].push_back(static_cast<int>(layout.rays.size()));
      layout.rays.push_back(std::move(ray));
    }
  }
  return layout;
}

std::vector<int> TreeLayout::rays_rooted_at(const VertexKey& key) const {
  std::vector<int> out;
  for (std::size_t r = 1; r < rays.size(); ++r) {
    if (rays[r].root == key) out.push_back(static_cast<int>(r));
  }
  return out;
}

int TreeLayout::ray_of(int depth, int index) const {
  return rays_at_depth.at(depth).at(index);
}

std::string Family::label(const VertexKey& key) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) os << ',';
    os << key[i];
  }
  os << ')';
  return os.str();
}

namespace {

class Grid2dFamily : public Family {
 public:
  explicit Grid2dFamily(bool triangulated) : triangulated_(triangulated) {}
  std::string tag() const override {
    return triangulated_ ? "grid2d(triangulated)" : "grid2d";
  }
  int degree_bound() const override { return triangulated_ ? 6 : 4; }
  VertexKey default_seed() const override { return {0, 0}; }
  bool contains(const VertexKey& k) const override { return k.size() == 2; }
  std::vector<VertexKey> neighbors(const VertexKey& k) const override {
    const auto x = k[0], y = k[1];
    std::vector<VertexKey> out{{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
    if (triangulated_) {
      out.push_back({x + 1, y + 1});
      out.push_back({x - 1, y - 1});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool triangulated_;
};

class RegularTreeFamily : public Family {
 public:
  explicit RegularTreeFamily(int k) : k_(k) {
    if (k < 2) throw PreconditionError("cayley_free: branching must be >= 2");
  }
  std::string tag() const override {
    return "cayley_free(" + std::to_string(k_) + ")";
  }
  int degree_bound() const override { return k_; }
  VertexKey default_seed() const override { return {}; }
  bool contains(const VertexKey& word) const override {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] < 0 || word[i] >= k_) return false;
      if (i > 0 && word[i] == word[i - 1]) return false;
    }
    return true;
  }
  std::vector<VertexKey> neighbors(const VertexKey& word) const override {
    std::vector<VertexKey> out;
    for (int g = 0; g < k_; ++g) {
      VertexKey next = word;
      if (!next.empty() && next.back() == g) {
        next.pop_back();
      } else {
        next.push_back(g);
      }
      out.push_back(std::move(next));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::string label(const VertexKey& word) const override {
    if (word.empty()) return "e";
    std::string s;
    for (auto g : word) s += static_cast<char>('a' + g);
    return s;
  }

 private:
  int k_;
};

class LineFamily : public Family {
 public:
  std::string tag() const override { return "biinfinite_line"; }
  int degree_bound() const override { return 2; }
  VertexKey default_seed() const override { return {0}; }
  bool contains(const VertexKey& k) const override { return k.size() == 1; }
  std::vector<VertexKey> neighbors(const VertexKey& k) const override {
    return {{k[0] - 1}, {k[0] + 1}};
  }
};

// Spine {x, 0}; tooth above every spine vertex {x, h}, h >= 1.
class CombFamily : public Family {
 public:
  std::string tag() const override { return "biinfinite_comb"; }
  int degree_bound() const override { return 3; }
  VertexKey default_seed() const override { return {0, 0}; }
  bool contains(const VertexKey& k) const override {
    return k.size() == 2 && k[1] >= 0;
  }
  std::vector<VertexKey> neighbors(const VertexKey& k) const override {
    const auto x = k[0], h = k[1];
    std::vector<VertexKey> out;
    if (h == 0) {
      out = {{x - 1, 0}, {x, 1}, {x + 1, 0}};
    } else {
      out = {{x, h - 1}, {x, h + 1}};
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

class CycleFamily : public Family {
 public:
  explicit CycleFamily(int n) : n_(n) {
    if (n < 3) throw PreconditionError("cycle: n must be >= 3");
  }
  std::string tag() const override { return "cycle(" + std::to_string(n_) + ")"; }
  int degree_bound() const override { return 2; }
  VertexKey default_seed() const override { return {0}; }
  bool contains(const VertexKey& k) const override {
    return k.size() == 1 && k[0] >= 0 && k[0] < n_;
  }
  std::vector<VertexKey> neighbors(const VertexKey& k) const override {
    std::vector<VertexKey> out{{(k[0] + n_ - 1) % n_}, {(k[0] + 1) % n_}};
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int n_;
};

class ChainFamily : public Family {
 public:
  explicit ChainFamily(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw PreconditionError("growing_circuit_chain: no lengths");
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
      if (lengths_[i] < 4 || lengths_[i] % 2 != 0) {
        throw PreconditionError("growing_circuit_chain: lengths must be even >= 4");
      }
      if (i > 0 && lengths_[i] <= lengths_[i - 1]) {
        throw PreconditionError("growing_circuit_chain: lengths must increase");
      }
    }
  }
  std::string tag() const override {
    std::string s = "growing_circuit_chain(";
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(lengths_[i]);
    }
    return s + ")";
  }
  int degree_bound() const override { return 3; }
  VertexKey default_seed() const override { return {0, 0}; }
  bool contains(const VertexKey& k) const override {
    return k.size() == 2 && k[0] >= 0 &&
           k[0] < static_cast<std::int64_t>(lengths_.size()) && k[1] >= 0 &&
           k[1] < lengths_[k[0]];
  }
  std::vector<VertexKey> neighbors(const VertexKey& k) const override {
    const auto i = k[0], j = k[1];
    const std::int64_t len = lengths_[i];
    std::vector<VertexKey> out{{i, (j + len - 1) % len}, {i, (j + 1) % len}};
    // Bridge: antipode of circuit i to the entry vertex of circuit i + 1.
    if (j == len / 2 && i + 1 < static_cast<std::int64_t>(lengths_.size())) {
      out.push_back({i + 1, 0});
    }
    if (j == 0 && i > 0) out.push_back({i - 1, lengths_[i - 1] / 2});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<int> lengths_;
};

class TreeFamily : public Family {
 public:
  explicit TreeFamily(const TreeSpec& spec)
      : layout_(TreeLayout::make(spec, static_cast<int>(spec.depths.size()), 0)) {
    for (std::size_t r = 1; r < layout_.rays.size(); ++r) {
      rooted_[layout_.rays[r].root].push_back(static_cast<int>(r));
    }
  }
  std::string tag() const override { return "trivalent_tree"; }
  int degree_bound() const override { return 3; }
  VertexKey default_seed() const override { return {0, 0}; }
  bool contains(const VertexKey& k) const override {
    if (k.size() != 2 || k[0] < 0 ||
        k[0] >= static_cast<std::int64_t>(layout_.rays.size())) {
      return false;
    }
    return k[0] == 0 || k[1] >= 1;
  }
  std::vector<VertexKey> neighbors(const VertexKey& k) const override {
    const auto r = k[0], p = k[1];
    std::vector<VertexKey> out;
    if (r == 0) {
      out = {{0, p - 1}, {0, p + 1}};
    } else {
      out.push_back(p == 1 ? layout_.rays[r].root : VertexKey{r, p - 1});
      out.push_back({r, p + 1});
    }
    if (auto it = rooted_.find(k); it != rooted_.end()) {
      for (int q : it->second) out.push_back({q, 1});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  TreeLayout layout_;
  std::map<VertexKey, std::vector<int>> rooted_;
};

class LadderFamily : public Family {
 public:
  std::string tag() const override { return "ladder"; }
  int degree_bound() const override { return 3; }
  VertexKey default_seed() const override { return {0, 0}; }
  bool contains(const VertexKey& k) const override {
    return k.size() == 2 && (k[1] == 0 || k[1] == 1);
  }
  std::vector<VertexKey> neighbors(const VertexKey& k) const override {
    std::vector<VertexKey> out{{k[0] - 1, k[1]}, {k[0], 1 - k[1]}, {k[0] + 1, k[1]}};
    std::sort(out.begin(), out.end());
    return out;
  }
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::unique_ptr<Family> make_family(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Grid2d& g) -> std::unique_ptr<Family> {
            return std::make_unique<Grid2dFamily>(g.triangulated);
          },
          [](const family::CayleyFree& c) -> std::unique_ptr<Family> {
            return std::make_unique<RegularTreeFamily>(c.k);
          },
          [](const family::BiinfiniteLine&) -> std::unique_ptr<Family> {
            return std::make_unique<LineFamily>();
          },
          [](const family::BiinfiniteComb&) -> std::unique_ptr<Family> {
            return std::make_unique<CombFamily>();
          },
          [](const family::Cycle& c) -> std::unique_ptr<Family> {
            return std::make_unique<CycleFamily>(c.n);
          },
          [](const family::GrowingCircuitChain& c) -> std::unique_ptr<Family> {
            return std::make_unique<ChainFamily>(c.lengths);
          },
          [](const family::TrivalentTree& t) -> std::unique_ptr<Family> {
            return std::make_unique<TreeFamily>(t.tree);
          },
          [](const family::Ladder&) -> std::unique_ptr<Family> {
            return std::make_unique<LadderFamily>();
          },
      },
      spec);
}

std::string family_tag(const FamilySpec& spec) { return make_family(spec)->tag(); }

GraphWindow build_window(const FamilySpec& spec,
                         const std::optional<VertexKey>& center, int radius) {
  if (radius < 0) throw PreconditionError("build_window: radius must be >= 0");
  auto fam = make_family(spec);
  const VertexKey seed = center.value_or(fam->default_seed());
  if (!fam->contains(seed)) {
    throw PreconditionError("build_window: seed is not a vertex of the family");
  }

  GraphWindow::Builder b;
  std::map<VertexKey, VertexId> ids;
  std::vector<int> depth;
  std::deque<VertexId> queue;
  auto visit = [&](const VertexKey& k, int d) {
    ids.emplace(k, static_cast<VertexId>(b.keys.size()));
    b.keys.push_back(k);
    b.labels.push_back(fam->label(k));
    depth.push_back(d);
    queue.push_back(static_cast<VertexId>(b.keys.size() - 1));
  };
  visit(seed, 0);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (depth[v] >= radius) continue;
    for (const VertexKey& u : fam->neighbors(b.keys[v])) {
      if (!ids.contains(u)) visit(u, depth[v] + 1);
    }
  }
  b.boundary.assign(b.keys.size(), false);
  for (std::size_t v = 0; v < b.keys.size(); ++v) {
    for (const VertexKey& u : fam->neighbors(b.keys[v])) {
      auto it = ids.find(u);
      if (it == ids.end()) {
        b.boundary[v] = true;
      } else if (it->second > static_cast<VertexId>(v)) {
        b.edges.emplace_back(static_cast<VertexId>(v), it->second);
      }
    }
  }
  b.degree_bound = fam->degree_bound();
  b.radius = radius;
  b.center = 0;
  b.family_tag = fam->tag();
  return GraphWindow(std::move(b));
}

}  // namespace ufh
