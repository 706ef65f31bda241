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

#include "ufh/trees.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ufh {

namespace {

std::string key_label(const VertexKey& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s + ")";
}

// Builds a window from explicit key adjacency with ids in BFS order from
// `root` (neighbours visited in key order).
GraphWindow window_from_keys(const std::map<VertexKey, std::set<VertexKey>>& adj,
                             const VertexKey& root, const std::set<VertexKey>& boundary,
                             int radius, std::string tag) {
  GraphWindow::Builder b;
  std::map<VertexKey, VertexId> ids;
  std::deque<VertexKey> queue{root};
  ids.emplace(root, 0);
  b.keys.push_back(root);
  while (!queue.empty()) {
    VertexKey k = queue.front();
    queue.pop_front();
    for (const VertexKey& u : adj.at(k)) {
      if (ids.contains(u)) continue;
      ids.emplace(u, static_cast<VertexId>(b.keys.size()));
      b.keys.push_back(u);
      queue.push_back(u);
    }
  }
  for (const auto& k : b.keys) {
    b.labels.push_back(key_label(k));
    b.boundary.push_back(boundary.contains(k));
  }
  for (const auto& [k, nbrs] : adj) {
    for (const auto& u : nbrs) {
      if (k < u) b.edges.emplace_back(ids.at(k), ids.at(u));
    }
  }
  b.degree_bound = 3;
  b.radius = radius;
  b.center = 0;
  b.family_tag = std::move(tag);
  return GraphWindow(std::move(b));
}

VertexKey ray_key(const TreeLayout& layout, int ray, std::int64_t pos) {
  if (ray != 0 && pos == 0) return layout.rays[ray].root;
  return {ray, pos};
}

// Vertices of R_ray from its branching point to its tip.
std::vector<VertexKey> ray_path(const TreeLayout& layout, int ray, std::int64_t len) {
  std::vector<VertexKey> out;
  for (std::int64_t p = 0; p <= len; ++p) out.push_back(ray_key(layout, ray, p));
  return out;
}

bool edges_connected(const GraphWindow& w, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return true;
  std::map<VertexId, VertexId> parent;
  std::function<VertexId(VertexId)> find = [&](VertexId x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    return it->second = find(it->second);
  };
  for (EdgeId e : edges) parent[find(w.edge(e).u)] = find(w.edge(e).v);
  std::set<VertexId> roots;
  for (EdgeId e : edges) roots.insert(find(w.edge(e).u));
  return roots.size() == 1;
}

}  // namespace

GraphWindow build_tree(const TreeSpec& spec, int depth, std::int64_t ray_len) {
  if (depth < 1) throw PreconditionError("build_tree: depth must be >= 1");
  if (ray_len < 1) throw PreconditionError("build_tree: ray_len must be >= 1");
  const TreeLayout layout = TreeLayout::make(spec, depth - 1, ray_len);
  std::map<VertexKey, std::set<VertexKey>> adj;
  std::set<VertexKey> boundary;
  auto link = [&](const VertexKey& a, const VertexKey& b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (std::int64_t x = -ray_len; x < ray_len; ++x) link({0, x}, {0, x + 1});
  boundary.insert({0, -ray_len});
  boundary.insert({0, ray_len});
  for (std::size_t r = 1; r < layout.rays.size(); ++r) {
    auto path = ray_path(layout, static_cast<int>(r), ray_len);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) link(path[i], path[i + 1]);
    boundary.insert(path.back());
  }
  return window_from_keys(adj, {0, 0}, boundary, static_cast<int>(ray_len),
                          "trivalent_tree(depth=" + std::to_string(depth) +
                              ",ray_len=" + std::to_string(ray_len) + ")");
}

int tree_level(const TreeLayout& layout, const VertexKey& key) {
  if (key[0] == 0) return key[1] == 0 ? 0 : 1;
  return layout.rays.at(key[0]).depth + 1;
}

int BipBasis::sign(int bip, EdgeId e) const {
  const auto& path = bips[bip].path;
  const Edge& ed = tree.edge(e);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == ed.u && path[i + 1] == ed.v) return 1;
    if (path[i] == ed.v && path[i + 1] == ed.u) return -1;
  }
  return 0;
}

std::vector<int> well_order(const std::vector<std::vector<bool>>& less) {
  const int n = static_cast<int>(less.size());
  // Height levels: P_0 = minimal elements, P_{j+1} = elements all of whose
  // predecessors sit in P_0 .. P_j (and not already placed lower).
  std::vector<int> level(n, -1);
  int placed = 0, max_level = -1;
  for (int j = 0; placed < n; ++j) {
    std::vector<int> now;
    for (int p = 0; p < n; ++p) {
      if (level[p] >= 0) continue;
      bool ready = true;
      for (int q = 0; q < n && ready; ++q) {
        if (less[q][p] && (level[q] < 0 || level[q] >= j)) ready = false;
      }
      if (ready) now.push_back(p);
    }
    if (now.empty()) throw PreconditionError("well_order: relation has a cycle");
    for (int p : now) level[p] = j;
    placed += static_cast<int>(now.size());
    max_level = j;
  }
  std::vector<std::vector<int>> levels(max_level + 1);
  for (int p = 0; p < n; ++p) levels[level[p]].push_back(p);

  std::vector<int> sigma;
  std::vector<bool> in_sigma(n, false);
  int j = 0, k = 0;
  while (static_cast<int>(sigma.size()) < n) {
    if (j <= max_level) {
      for (int p : levels[j]) {
        if (in_sigma[p]) continue;
        bool ready = true;
        for (int q = 0; q < n && ready; ++q) {
          if (less[q][p] && !in_sigma[q]) ready = false;
        }
        if (ready) {
          sigma.push_back(p);
          in_sigma[p] = true;
          break;
        }
      }
    }
    if (j <= k) {
      ++j;
    } else {
      j = 0;
      ++k;
    }
  }
  return sigma;
}

BipBasis construct_bips(const TreeSpec& spec, int depth, std::int64_t ray_len) {
  BipBasis pb{build_tree(spec, depth, ray_len), TreeLayout::make(spec, depth - 1, ray_len)};
  pb.depth = depth;
  const GraphWindow& t = pb.tree;
  const TreeLayout& layout = pb.layout;

  auto add_bip = [&](const std::vector<VertexKey>& keys, int d) {
    Bip bip;
    bip.depth = d;
    for (const auto& k : keys) bip.path.push_back(t.at(k));
    for (std::size_t i = 0; i + 1 < bip.path.size(); ++i) {
      bip.edges.push_back(t.edge_id(bip.path[i], bip.path[i + 1]));
    }
    std::sort(bip.edges.begin(), bip.edges.end());
    pb.bips.push_back(std::move(bip));
  };

  std::vector<VertexKey> spine;
  for (std::int64_t x = -ray_len; x <= ray_len; ++x) spine.push_back({0, x});
  add_bip(spine, 1);

  for (int n = 1; n < depth; ++n) {
    if (n >= static_cast<int>(layout.rays_at_depth.size())) break;
    // Rays u of depth n - 1, as (vertex list from the branching point, rays
    // of depth n branching off it keyed by index in that list).
    std::vector<std::pair<std::vector<VertexKey>, std::vector<std::pair<std::int64_t, int>>>> hosts;
    if (n == 1) {
      for (int dir : {1, -1}) {
        std::vector<VertexKey> half;
        for (std::int64_t x = 0; x <= ray_len; ++x) half.push_back({0, dir * x});
        std::vector<std::pair<std::int64_t, int>> branches;
        for (int r : layout.rays_at_depth.at(1)) {
          const std::int64_t x = layout.rays[r].root[1];
          if ((x > 0) == (dir > 0)) branches.emplace_back(dir * x, r);
        }
        hosts.emplace_back(std::move(half), std::move(branches));
      }
    } else {
      for (int u : layout.rays_at_depth.at(n - 1)) {
        std::vector<std::pair<std::int64_t, int>> branches;
        for (int r : layout.rays_at_depth.at(n)) {
          if (layout.rays[r].parent_ray == u) {
            branches.emplace_back(layout.rays[r].root[1], r);
          }
        }
        hosts.emplace_back(ray_path(layout, u, ray_len), std::move(branches));
      }
    }
    for (auto& [host, branches] : hosts) {
      std::sort(branches.begin(), branches.end());
      for (std::size_t i = 0; i < branches.size(); ++i) {
        auto [at, r] = branches[i];
        auto down = ray_path(layout, r, ray_len);
        std::vector<VertexKey> keys(down.rbegin(), down.rend());
        if (i + 1 < branches.size()) {
          auto [next_at, next_r] = branches[i + 1];
          for (std::int64_t p = at + 1; p <= next_at; ++p) keys.push_back(host[p]);
          auto up = ray_path(layout, next_r, ray_len);
          keys.insert(keys.end(), up.begin() + 1, up.end());
        } else {
          for (std::size_t p = at + 1; p < host.size(); ++p) keys.push_back(host[p]);
        }
        add_bip(keys, n + 1);
      }
    }
  }

  const int nb = static_cast<int>(pb.bips.size());
  pb.cover.assign(t.num_edges(), {});
  for (int p = 0; p < nb; ++p) {
    for (EdgeId e : pb.bips[p].edges) pb.cover[e].push_back(p);
  }
  pb.less.assign(nb, std::vector<bool>(nb, false));
  for (const auto& over : pb.cover) {
    for (int p : over) {
      for (int q : over) {
        if (pb.bips[q].depth == pb.bips[p].depth + 1) pb.less[p][q] = true;
      }
    }
  }
  for (int m = 0; m < nb; ++m) {
    for (int p = 0; p < nb; ++p) {
      if (!pb.less[p][m]) continue;
      for (int q = 0; q < nb; ++q) {
        if (pb.less[m][q]) pb.less[p][q] = true;
      }
    }
  }
  pb.order = well_order(pb.less);
  pb.rank.assign(nb, 0);
  for (int i = 0; i < nb; ++i) pb.rank[pb.order[i]] = i;

  pb.last_partial.assign(t.num_edges(), -1);
  pb.last_total.assign(t.num_edges(), -1);
  pb.m_partial.assign(nb, {});
  pb.m_total.assign(nb, {});
  for (std::size_t e = 0; e < t.num_edges(); ++e) {
    const auto& over = pb.cover[e];
    for (int p : over) {
      if (std::all_of(over.begin(), over.end(),
                      [&](int q) { return q == p || pb.less[q][p]; })) {
        pb.last_partial[e] = p;
      }
      if (pb.last_total[e] < 0 || pb.rank[p] > pb.rank[pb.last_total[e]]) {
        pb.last_total[e] = p;
      }
    }
    if (pb.last_partial[e] >= 0) pb.m_partial[pb.last_partial[e]].push_back(static_cast<EdgeId>(e));
    if (pb.last_total[e] >= 0) pb.m_total[pb.last_total[e]].push_back(static_cast<EdgeId>(e));
  }

  TamenessReport report = check_tameness(pb);
  if (!report.all()) {
    std::string msg = "construct_bips: tameness check failed";
    for (const auto& f : report.failures) msg += "; " + f;
    throw std::logic_error(msg);
  }
  return pb;
}

TamenessReport check_tameness(const BipBasis& pb) {
  TamenessReport r;
  const GraphWindow& t = pb.tree;
  const int nb = static_cast<int>(pb.bips.size());
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    if (r.failures.size() < 20) r.failures.push_back(std::move(what));
  };
  std::vector<int> level(t.num_vertices());
  for (std::size_t v = 0; v < t.num_vertices(); ++v) {
    level[v] = tree_level(pb.layout, t.key(static_cast<VertexId>(v)));
  }
  auto edge_level = [&](EdgeId e) {
    return std::max(level[t.edge(e).u], level[t.edge(e).v]);
  };
  auto touches_level = [&](EdgeId e, int k) {
    return level[t.edge(e).u] <= k || level[t.edge(e).v] <= k;
  };

  // 1. At most three bips per edge.
  for (std::size_t e = 0; e < t.num_edges(); ++e) {
    if (pb.cover[e].size() > 3) fail(r.at_most_three_cover, "edge " + std::to_string(e) + " has >3 bips");
  }
  // 2. Bips of P_d avoid every edge meeting T_{d-2}.
  for (int p = 0; p < nb; ++p) {
    const int d = pb.bips[p].depth;
    if (d < 2) continue;
    for (EdgeId e : pb.bips[p].edges) {
      if (touches_level(e, d - 2)) {
        fail(r.new_bips_avoid_old_tree, "bip " + std::to_string(p) + " meets T_" + std::to_string(d - 2));
        break;
      }
    }
  }
  // 3. P_n covers T_n.
  for (std::size_t e = 0; e < t.num_edges(); ++e) {
    const int lv = edge_level(static_cast<EdgeId>(e));
    const auto& over = pb.cover[e];
    if (std::none_of(over.begin(), over.end(), [&](int p) { return pb.bips[p].depth <= lv; })) {
      fail(r.covers_each_level, "edge " + std::to_string(e) + " of T_" + std::to_string(lv) + " uncovered");
    }
  }
  // 4. Finite predecessor sets (automatic on a window) and nonempty M_p.
  for (int p = 0; p < nb; ++p) {
    if (pb.m_partial[p].empty()) fail(r.finite_pred_nonempty_m, "M_" + std::to_string(p) + " empty");
  }
  // 5. For p in P_{n+1} and e in M_p some e' meeting T_n carries exactly
  //    the strict predecessors of p over e, which are the bips of P_n over e.
  for (int p = 0; p < nb; ++p) {
    const int n = pb.bips[p].depth - 1;
    if (n < 1) continue;
    for (EdgeId e : pb.m_partial[p]) {
      std::vector<int> below, older;
      for (int q : pb.cover[e]) {
        if (pb.less[q][p]) below.push_back(q);
        if (pb.bips[q].depth <= n) older.push_back(q);
      }
      // An empty Q_p only contributes the empty sum; no e' is needed.
      bool found = below.empty();
      for (std::size_t e2 = 0; e2 < t.num_edges() && !found; ++e2) {
        found = touches_level(static_cast<EdgeId>(e2), n) && pb.cover[e2] == below;
      }
      if (below != older || !found) {
        fail(r.predecessor_edge, "bip " + std::to_string(p) + " edge " + std::to_string(e));
      }
    }
  }
  // 6. Each M_p connected.
  for (int p = 0; p < nb; ++p) {
    if (!edges_connected(t, pb.m_partial[p])) fail(r.m_connected, "M_" + std::to_string(p) + " disconnected");
  }
  // Well-order partition.
  for (std::size_t e = 0; e < t.num_edges(); ++e) {
    if (pb.last_total[e] < 0) fail(r.total_partition, "edge " + std::to_string(e) + " without last bip");
  }
  for (int p = 0; p < nb; ++p) {
    if (pb.m_total[p].empty() || !edges_connected(t, pb.m_total[p])) {
      fail(r.total_partition, "well-ordered M_" + std::to_string(p) + " empty or disconnected");
    }
  }
  return r;
}

TreeCoefficients tree_coefficients(const Chain& c, const BipBasis& pb) {
  if (c.degree() != 1) throw PreconditionError("tree_coefficients: need a 1-chain");
  if (!is_cycle(pb.tree, c)) throw PreconditionError("tree_coefficients: not a cycle");
  const bool z2 = c.ring() == Ring::kZ2;
  TreeCoefficients out;
  out.f.assign(pb.bips.size(), 0);
  auto value_on = [&](int p, EdgeId e) {
    const Edge& ed = pb.tree.edge(e);
    std::int64_t v = c.get({ed.u, ed.v});
    for (int q : pb.cover[e]) {
      if (pb.rank[q] < pb.rank[p]) v = checked_add(v, -pb.sign(q, e) * out.f[q]);
    }
    v *= pb.sign(p, e);
    return z2 ? ((v % 2) + 2) % 2 : v;
  };
  for (int p : pb.order) {
    const auto& m = pb.m_total[p];
    if (m.empty()) continue;
    out.f[p] = value_on(p, m.front());
    for (std::size_t i = 1; i < m.size(); ++i) {
      if (value_on(p, m[i]) != out.f[p]) out.well_defined = false;
    }
  }
  if (!out.well_defined) throw std::logic_error("tree_coefficients: value depends on the edge");
  return out;
}

Chain bips_to_cycle(const std::vector<std::int64_t>& f, const BipBasis& pb, Ring ring) {
  if (f.size() != pb.bips.size()) throw PreconditionError("bips_to_cycle: size mismatch");
  Chain out(1, ring);
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (f[p] != 0) out += f[p] * path_chain(pb.bips[p].path, ring);
  }
  return out;
}

CombGrowth comb_counterexample_check(int n_teeth) {
  if (n_teeth < 1) throw PreconditionError("comb_counterexample_check: need a tooth");
  constexpr std::int64_t kHeight = 2;
  const std::int64_t n = n_teeth;
  std::map<VertexKey, std::set<VertexKey>> adj;
  std::set<VertexKey> boundary{{-1, 0}, {n, 0}};
  auto link = [&](const VertexKey& a, const VertexKey& b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (std::int64_t x = -1; x < n; ++x) link({x, 0}, {x + 1, 0});
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t h = 0; h < kHeight; ++h) link({x, h}, {x, h + 1});
    boundary.insert({x, kHeight});
  }
  const GraphWindow w = window_from_keys(adj, {0, 0}, boundary, static_cast<int>(n + 1),
                                         "biinfinite_comb(teeth=" + std::to_string(n) + ")");

  auto tooth_down = [&](std::int64_t x) {
    std::vector<VertexKey> out;
    for (std::int64_t h = kHeight; h >= 0; --h) out.push_back({x, h});
    return out;
  };
  // Bip key j: -1 for the spine, then the two bips from the left end, then
  // one bip per tooth j leaving it to the right.
  struct CombBip {
    std::int64_t j;  // left tooth, or -3 / -2 for the left-end bips
    std::vector<VertexId> path;
  };
  std::vector<CombBip> bips;
  auto add = [&](std::int64_t j, const std::vector<VertexKey>& keys) {
    CombBip b{j, {}};
    for (const auto& k : keys) b.path.push_back(w.at(k));
    bips.push_back(std::move(b));
  };
  {
    std::vector<VertexKey> spine;
    for (std::int64_t x = -1; x <= n; ++x) spine.push_back({x, 0});
    add(-4, spine);
  }
  for (std::int64_t first = 0; first < 2 && first < n; ++first) {
    std::vector<VertexKey> keys;
    for (std::int64_t x = -1; x <= first; ++x) keys.push_back({x, 0});
    for (std::int64_t h = 1; h <= kHeight; ++h) keys.push_back({first, h});
    add(first - 3, keys);
  }
  for (std::int64_t j = 0; j < n; ++j) {
    auto keys = tooth_down(j);
    if (j + 2 <= n - 1) {
      for (std::int64_t x = j + 1; x <= j + 2; ++x) keys.push_back({x, 0});
      for (std::int64_t h = 1; h <= kHeight; ++h) keys.push_back({j + 2, h});
    } else {
      for (std::int64_t x = j + 1; x <= n; ++x) keys.push_back({x, 0});
    }
    add(j, keys);
  }
  // Bips are already listed in the chosen well-order.
  const int nb = static_cast<int>(bips.size());

  Chain c(1, Ring::kZ);
  std::int64_t s = 1;
  c.add({w.at({-1, 0}), w.at({0, 0})}, s);
  for (std::int64_t x = 0; x < n; ++x) {
    const std::int64_t a = x % 2 == 0 ? 1 : -1;
    for (std::int64_t h = 0; h < kHeight; ++h) c.add({w.at({x, h}), w.at({x, h + 1})}, a);
    s -= a;
    c.add({w.at({x, 0}), w.at({x + 1, 0})}, s);
  }

  std::vector<std::vector<std::pair<int, int>>> cover(w.num_edges());  // (bip, sign)
  for (int p = 0; p < nb; ++p) {
    const auto& path = bips[p].path;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const EdgeId e = w.edge_id(path[i], path[i + 1]);
      cover[e].emplace_back(p, path[i] < path[i + 1] ? 1 : -1);
    }
  }
  std::vector<std::vector<EdgeId>> m(nb);
  for (std::size_t e = 0; e < w.num_edges(); ++e) {
    int last = -1;
    for (auto [p, sg] : cover[e]) last = std::max(last, p);
    if (last >= 0) m[last].push_back(static_cast<EdgeId>(e));
  }
  std::vector<std::int64_t> f(nb, 0);
  auto value_on = [&](int p, EdgeId e) {
    const Edge& ed = w.edge(e);
    std::int64_t v = c.get({ed.u, ed.v});
    int own = 0;
    for (auto [q, sg] : cover[e]) {
      if (q < p) v = checked_add(v, -sg * f[q]);
      if (q == p) own = sg;
    }
    return own * v;
  };
  auto is_spine = [&](EdgeId e) { return w.key(w.edge(e).u)[1] == 0 && w.key(w.edge(e).v)[1] == 0; };

  CombGrowth out;
  out.n_teeth = n_teeth;
  for (int p = 0; p < nb; ++p) {
    std::vector<EdgeId> spine_edges, tooth_edges;
    for (EdgeId e : m[p]) (is_spine(e) ? spine_edges : tooth_edges).push_back(e);
    auto leftmost = [&](EdgeId a, EdgeId b) {
      return std::min(w.key(w.edge(a).u)[0], w.key(w.edge(a).v)[0]) <
             std::min(w.key(w.edge(b).u)[0], w.key(w.edge(b).v)[0]);
    };
    std::sort(spine_edges.begin(), spine_edges.end(), leftmost);
    if (!spine_edges.empty()) f[p] = value_on(p, spine_edges.front());
    for (EdgeId e : tooth_edges) {
      if (!spine_edges.empty() && value_on(p, e) != f[p]) out.tooth_consistent = false;
    }
  }
  for (int p = 0; p < nb; ++p) {
    if (bips[p].j < 0) continue;
    const std::int64_t mag = f[p] < 0 ? -f[p] : f[p];
    (bips[p].j % 2 == 0 ? out.green : out.red).push_back(mag);
    out.max_magnitude = std::max(out.max_magnitude, mag);
  }
  for (const auto* seq : {&out.green, &out.red}) {
    for (std::size_t i = 1; i < seq->size(); ++i) {
      if ((*seq)[i] <= (*seq)[i - 1]) out.strictly_increasing = false;
    }
  }
  return out;
}

}  // namespace ufh
