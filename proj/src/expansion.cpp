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

#include "ufh/expansion.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "ufh/ends.hpp"
#include "ufh/flow.hpp"
#include "ufh/linear.hpp"
#include "ufh/maxflow.hpp"

namespace ufh {

namespace {

using EdgeKey = std::pair<VertexId, VertexId>;

EdgeKey edge_key(VertexId a, VertexId b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

using Triangle = std::array<VertexId, 3>;

// Faces of a sorted triangle with their coefficient in its boundary.
std::array<std::pair<EdgeKey, int>, 3> faces(const Triangle& t) {
  return {{{{t[1], t[2]}, 1}, {{t[0], t[2]}, -1}, {{t[0], t[1]}, 1}}};
}

bool odd(std::int64_t x) { return x % 2 != 0; }

bool nonzero_in(Ring ring, std::int64_t x) { return ring == Ring::kZ2 ? odd(x) : x != 0; }

// Minimum of |dS| / |S| over nonempty S inside `pool` with |S| <= max_size,
// enumerated in Gray-code order.
CheegerResult gray_code_min(const GraphWindow& w, const std::vector<VertexId>& pool,
                            std::size_t max_size) {
  const std::size_t k = pool.size();
  if (k > kMaxExactCheegerVertices) {
    throw PreconditionError("cheeger: exact mode needs at most 24 vertices");
  }
  std::vector<char> in(w.num_vertices(), 0);
  std::int64_t boundary = 0, size = 0;
  std::int64_t best_b = -1, best_s = 1;
  std::uint32_t best_mask = 0;
  const std::uint32_t total = k == 0 ? 0 : (std::uint32_t{1} << k);
  for (std::uint32_t i = 1; i < total; ++i) {
    const int bit = __builtin_ctz(i);
    const VertexId v = pool[bit];
    for (VertexId u : w.neighbors(v)) boundary += in[u] == in[v] ? 1 : -1;
    in[v] = !in[v];
    size += in[v] ? 1 : -1;
    if (size < 1 || static_cast<std::size_t>(size) > max_size) continue;
    if (best_b < 0 || boundary * best_s < best_b * size) {
      best_b = boundary;
      best_s = size;
      best_mask = i ^ (i >> 1);
    }
  }
  CheegerResult out;
  out.exact = true;
  if (best_b < 0) return out;
  out.value = Ratio(best_b, best_s);
  for (std::size_t j = 0; j < k; ++j) {
    if (best_mask >> j & 1) out.witness.push_back(pool[j]);
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

CheegerResult heuristic_cheeger(const GraphWindow& w) {
  const std::size_t n = w.num_vertices();
  const std::size_t half = n / 2;
  CheegerResult out;
  if (half == 0) return out;
  std::vector<char> in(n, 0);
  std::int64_t best_b = -1, best_s = 1;
  std::vector<char> best;
  // Ball sweep around the center.
  const auto dist = bfs_distances(w, w.center());
  for (int k = 0;; ++k) {
    std::vector<char> mask(n, 0);
    std::int64_t size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] != kUnreachable && dist[v] <= k) {
        mask[v] = 1;
        ++size;
      }
    }
    if (size == 0 || static_cast<std::size_t>(size) > half) break;
    std::int64_t b = 0;
    for (const Edge& e : w.edges()) b += mask[e.u] != mask[e.v];
    if (best_b < 0 || b * best_s < best_b * size) {
      best_b = b;
      best_s = size;
      best = mask;
    }
    if (k > w.radius() + 1) break;
  }
  if (best_b < 0) {
    best.assign(n, 0);
    best[w.center()] = 1;
    best_b = static_cast<std::int64_t>(w.degree(w.center()));
    best_s = 1;
  }
  // Greedy toggles that strictly lower the ratio.
  in = best;
  std::int64_t b = best_b, s = best_s;
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t v = 0; v < n; ++v) {
      const std::int64_t ns = s + (in[v] ? -1 : 1);
      if (ns < 1 || static_cast<std::size_t>(ns) > half) continue;
      std::int64_t nb = b;
      for (VertexId u : w.neighbors(static_cast<VertexId>(v))) nb += in[u] == in[v] ? 1 : -1;
      if (nb * s < b * ns) {
        in[v] = !in[v];
        b = nb;
        s = ns;
        improved = true;
      }
    }
  }
  out.value = Ratio(b, s);
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v]) out.witness.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<EdgeKey> rips_edges_inside(const RipsComplex& rips, const std::vector<bool>& mask) {
  std::vector<EdgeKey> out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (!mask[v]) continue;
    for (const auto& [u, d] : rips.near(static_cast<VertexId>(v))) {
      if (u > static_cast<VertexId>(v) && mask[u]) out.emplace_back(static_cast<VertexId>(v), u);
    }
  }
  return out;
}

// Complete depth-first search for integer x with |x| <= K solving the rows
// up to per-row slack K * slack[r].
class BoundedSearch {
 public:
  enum class Outcome { kFound, kInfeasible, kBudget };

  BoundedSearch(std::vector<std::vector<std::pair<int, int>>> rows,
                std::vector<std::vector<std::pair<int, int>>> var_rows,
                std::vector<std::int64_t> slack, std::vector<std::int64_t> target)
      : rows_(std::move(rows)), var_rows_(std::move(var_rows)),
        slack_(std::move(slack)), target_(std::move(target)) {}

  Outcome run(std::int64_t k, std::size_t budget) {
    k_ = k;
    budget_ = budget;
    nodes_ = 0;
    exhausted_ = false;
    res_ = target_;
    open_.assign(rows_.size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) open_[r] = static_cast<std::int64_t>(rows_[r].size());
    value_.assign(var_rows_.size(), 0);
    assigned_.assign(var_rows_.size(), false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_ok(static_cast<int>(r))) return Outcome::kInfeasible;
    }
    if (dfs()) return Outcome::kFound;
    return exhausted_ ? Outcome::kBudget : Outcome::kInfeasible;
  }

  const std::vector<std::int64_t>& values() const { return value_; }
  const std::vector<std::int64_t>& residuals() const { return res_; }

 private:
  bool row_ok(int r) const {
    const std::int64_t a = res_[r] < 0 ? -res_[r] : res_[r];
    return a <= k_ * (open_[r] + slack_[r]);
  }

  bool dfs() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    int pick = -1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::int64_t a = res_[r] < 0 ? -res_[r] : res_[r];
      if (a <= k_ * slack_[r]) continue;
      if (pick < 0 || open_[r] < open_[pick]) pick = static_cast<int>(r);
    }
    if (pick < 0) return true;
    int var = -1, coef = 0;
    for (auto [v, c] : rows_[pick]) {
      if (!assigned_[v]) {
        var = v;
        coef = c;
        break;
      }
    }
    if (var < 0) return false;
    const std::int64_t dir = (res_[pick] > 0 ? 1 : -1) * coef;
    std::vector<std::int64_t> order;
    for (std::int64_t m = 1; m <= k_; ++m) order.push_back(dir * m);
    order.push_back(0);
    for (std::int64_t m = 1; m <= k_; ++m) order.push_back(-dir * m);
    assigned_[var] = true;
    for (std::int64_t x : order) {
      bool ok = true;
      for (auto [r, c] : var_rows_[var]) {
        res_[r] -= c * x;
        --open_[r];
      }
      for (auto [r, c] : var_rows_[var]) ok = ok && row_ok(r);
      value_[var] = x;
      if (ok && dfs()) return true;
      for (auto [r, c] : var_rows_[var]) {
        res_[r] += c * x;
        ++open_[r];
      }
      value_[var] = 0;
      if (exhausted_) break;
    }
    assigned_[var] = false;
    return false;
  }

  std::vector<std::vector<std::pair<int, int>>> rows_;      // row -> (var, coef)
  std::vector<std::vector<std::pair<int, int>>> var_rows_;  // var -> (row, coef)
  std::vector<std::int64_t> slack_;
  std::vector<std::int64_t> target_;
  std::vector<std::int64_t> res_;
  std::vector<std::int64_t> open_;
  std::vector<std::int64_t> value_;
  std::vector<bool> assigned_;
  std::int64_t k_ = 0;
  std::size_t budget_ = 0, nodes_ = 0;
  bool exhausted_ = false;
};

// Spreads `need` over the slack triangles of one edge, at most `k` each.
void fill_slack(Chain& g, const std::vector<std::pair<Triangle, int>>& slack, std::int64_t need,
                std::int64_t k) {
  for (const auto& [t, sign] : slack) {
    if (need == 0) break;
    const std::int64_t chunk = std::clamp(need, -k, k);
    g.add(std::span<const VertexId>(t.data(), 3), sign * chunk);
    need -= chunk;
  }
  if (need != 0) throw std::logic_error("fill_slack: not enough slack");
}

}  // namespace

CheegerResult cheeger(const GraphWindow& w, CheegerMode mode) {
  if (mode == CheegerMode::kHeuristic) return heuristic_cheeger(w);
  if (w.num_vertices() < 2) throw PreconditionError("cheeger: need at least two vertices");
  std::vector<VertexId> pool(w.num_vertices());
  for (std::size_t v = 0; v < pool.size(); ++v) pool[v] = static_cast<VertexId>(v);
  return gray_code_min(w, pool, w.num_vertices() / 2);
}

CheegerResult relative_cheeger(const GraphWindow& w, const std::vector<bool>& U) {
  std::vector<VertexId> pool;
  for (std::size_t v = 0; v < U.size(); ++v) {
    if (U[v]) pool.push_back(static_cast<VertexId>(v));
  }
  if (pool.empty()) throw PreconditionError("relative_cheeger: U is empty");
  return gray_code_min(w, pool, pool.size());
}

std::vector<Ratio> ball_ratios(const GraphWindow& w) {
  std::vector<Ratio> out;
  for (int k = 0; k < w.radius(); ++k) {
    auto mask = membership_mask(w, ball(w, w.center(), k));
    auto b = edge_boundary(w, mask);
    std::int64_t size = std::count(mask.begin(), mask.end(), true);
    out.emplace_back(static_cast<std::int64_t>(b.size()), size);
  }
  return out;
}

H0Witness h0_expansion_witness(const GraphWindow& w, const std::vector<bool>& U,
                               const std::vector<VertexId>& W, Ratio eps) {
  if (U.size() != w.num_vertices()) throw PreconditionError("h0_expansion_witness: mask size");
  if (eps <= 0) throw PreconditionError("h0_expansion_witness: eps must be positive");
  for (VertexId v : W) {
    if (!U.at(v)) throw PreconditionError("h0_expansion_witness: W must lie in U");
  }
  H0Witness out;
  out.bound = (eps.denominator() + eps.numerator() - 1) / eps.numerator();
  if (W.empty()) return out;
  const std::size_t u_size = std::count(U.begin(), U.end(), true);
  if (u_size <= 20 && relative_cheeger(w, U).value < eps) {
    throw PreconditionError("h0_expansion_witness: eps exceeds the expansion of U");
  }
  const int n = static_cast<int>(w.num_vertices());
  const int source = n, sink = n + 1;
  constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;
  const std::int64_t demand = static_cast<std::int64_t>(W.size());
  for (std::int64_t cap = 1; cap <= out.bound; ++cap) {
    FlowNetwork net(n + 2);
    bool has_source = false;
    for (int v = 0; v < n; ++v) {
      if (!U[v]) {
        net.add_arc(source, v, kUnbounded);
        has_source = true;
      }
    }
    if (!has_source) throw std::runtime_error("h0_expansion_witness: U covers the window");
    for (VertexId v : W) net.add_arc(v, sink, 1);
    std::vector<std::pair<int, int>> arcs;
    for (const Edge& e : w.edges()) arcs.emplace_back(net.add_arc(e.u, e.v, cap), net.add_arc(e.v, e.u, cap));
    if (net.solve(source, sink) < demand) continue;
    const auto& edges = w.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::int64_t net_flow = net.flow(arcs[i].first) - net.flow(arcs[i].second);
      if (net_flow != 0) out.g.add({edges[i].u, edges[i].v}, net_flow);
    }
    out.capacity = cap;
    // Re-check dg = chi_W on U.
    auto d = defects(w, out.g);
    std::vector<bool> in_w(w.num_vertices(), false);
    for (VertexId v : W) in_w[v] = true;
    for (int v = 0; v < n; ++v) {
      if (U[v] && d[v] != (in_w[v] ? 1 : 0)) {
        throw std::logic_error("h0_expansion_witness: flow violates dg = chi_W");
      }
    }
    return out;
  }
  throw std::runtime_error("h0_expansion_witness: no flow within ceil(1/eps)");
}

bool verify_filling(const RipsComplex& rips, const std::vector<bool>& U, const Chain& f,
                    const Chain& g) {
  if (g.degree() != 2) return false;
  const Chain dg = g.is_zero() ? Chain(1, g.ring()) : boundary(g);
  for (const auto& [a, b] : rips_edges_inside(rips, U)) {
    std::int64_t x = dg.get({a, b}), y = f.get({a, b});
    if (f.ring() == Ring::kZ2) {
      x = ((x % 2) + 2) % 2;
      y = ((y % 2) + 2) % 2;
    }
    if (x != y) return false;
  }
  return true;
}

ProbeResult h1_expansion_probe(const RipsComplex& rips, const std::vector<bool>& U,
                               const Chain& f, const ProbeOptions& options) {
  const GraphWindow& w = rips.base();
  if (U.size() != w.num_vertices()) throw PreconditionError("h1_expansion_probe: mask size");
  if (f.degree() != 1) throw PreconditionError("h1_expansion_probe: f must be a 1-chain");
  const Ring ring = f.ring();
  for (const auto& [s, c] : f.terms()) {
    if (!U[s[0]] || !U[s[1]] || !rips.is_edge(s[0], s[1])) {
      throw PreconditionError("h1_expansion_probe: f leaves U");
    }
  }
  {
    std::vector<bool> rim(w.num_vertices(), false);
    for (VertexId v : vertex_boundary(w, U)) rim[v] = true;
    const auto d = defects(w, f);
    for (std::size_t v = 0; v < d.size(); ++v) {
      if (nonzero_in(ring, d[v]) && !rim[v] && !w.is_boundary(static_cast<VertexId>(v))) {
        throw PreconditionError("h1_expansion_probe: df is not supported on the rim of U");
      }
    }
  }

  ProbeResult out;
  out.ring = ring;
  out.g = Chain(2, ring);

  std::map<EdgeKey, int> row_of;
  std::vector<EdgeKey> row_edges = rips_edges_inside(rips, U);
  for (std::size_t r = 0; r < row_edges.size(); ++r) row_of[row_edges[r]] = static_cast<int>(r);
  std::vector<Triangle> inner;
  std::vector<std::vector<std::pair<Triangle, int>>> slack(row_edges.size());
  for (const Triangle& t : rips.triangles_touching(U)) {
    const int in = U[t[0]] + U[t[1]] + U[t[2]];
    if (in == 3) {
      inner.push_back(t);
      continue;
    }
    for (const auto& [e, c] : faces(t)) {
      if (U[e.first] && U[e.second]) slack[row_of.at(e)].emplace_back(t, c);
    }
  }
  out.variables = inner.size();
  std::vector<std::int64_t> target(row_edges.size());
  for (std::size_t r = 0; r < row_edges.size(); ++r) {
    target[r] = f.get({row_edges[r].first, row_edges[r].second});
  }

  if (f.is_zero()) {
    out.feasible = out.exact = true;
    out.method = "zero input";
    return out;
  }

  // Rows without slack are the binding constraints of the exact solvers.
  std::vector<int> bind_index(row_edges.size(), -1);
  int binding = 0;
  for (std::size_t r = 0; r < row_edges.size(); ++r) {
    if (slack[r].empty()) bind_index[r] = binding++;
  }

  auto finish = [&](ProbeResult& res) {
    res.support = res.g.support_size();
    res.norm = sup_norm(res.g);
    if (!verify_filling(rips, U, f, res.g)) {
      throw std::logic_error("h1_expansion_probe: certificate fails dg = f on U");
    }
    return res;
  };

  if (ring == Ring::kZ2) {
    std::vector<Bits> columns;
    for (const Triangle& t : inner) {
      Bits col(binding);
      for (const auto& [e, c] : faces(t)) {
        const int b = bind_index[row_of.at(e)];
        if (b >= 0) col.set(b);
      }
      columns.push_back(std::move(col));
    }
    Bits rhs(binding);
    for (std::size_t r = 0; r < row_edges.size(); ++r) {
      if (bind_index[r] >= 0 && odd(target[r])) rhs.set(bind_index[r]);
    }
    const Gf2Solution sol = gf2_solve(columns, rhs);
    out.method = "gf2 elimination";
    if (!sol.feasible) {
      out.exact = true;
      return out;
    }
    const Bits x = gf2_reduce_weight(sol.x, sol.kernel);
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (x.test(j)) out.g.add(std::span<const VertexId>(inner[j].data(), 3), 1);
    }
    const Chain dg = out.g.is_zero() ? Chain(1, ring) : boundary(out.g);
    for (std::size_t r = 0; r < row_edges.size(); ++r) {
      if (slack[r].empty()) continue;
      if (odd(target[r] - dg.get({row_edges[r].first, row_edges[r].second}))) {
        out.g.add(std::span<const VertexId>(slack[r].front().first.data(), 3), 1);
      }
    }
    out.feasible = true;
    out.exact = true;  // the Z/2 sup norm is 1 for every nonzero filling
    out.method = "gf2 elimination; support shrunk greedily (heuristic)";
    return finish(out);
  }

  // Integers: exact lattice feasibility first.
  std::vector<SparseVec> columns;
  for (const Triangle& t : inner) {
    SparseVec col;
    for (const auto& [e, c] : faces(t)) {
      const int b = bind_index[row_of.at(e)];
      if (b >= 0) col[b] = c;
    }
    columns.push_back(std::move(col));
  }
  SparseVec rhs;
  for (std::size_t r = 0; r < row_edges.size(); ++r) {
    if (bind_index[r] >= 0 && target[r] != 0) rhs[bind_index[r]] = target[r];
  }
  const IntSolution lattice = int_solve(columns, rhs);
  if (!lattice.feasible) {
    out.exact = true;
    out.method = "integer lattice";
    return out;
  }
  out.feasible = true;

  std::vector<std::vector<std::pair<int, int>>> rows(row_edges.size()), var_rows(inner.size());
  for (std::size_t j = 0; j < inner.size(); ++j) {
    for (const auto& [e, c] : faces(inner[j])) {
      const int r = row_of.at(e);
      rows[r].emplace_back(static_cast<int>(j), c);
      var_rows[j].emplace_back(r, c);
    }
  }
  std::vector<std::int64_t> slack_count(row_edges.size());
  for (std::size_t r = 0; r < row_edges.size(); ++r) {
    slack_count[r] = static_cast<std::int64_t>(slack[r].size());
  }
  BoundedSearch search(rows, var_rows, slack_count, target);
  bool lower_complete = true;
  for (std::int64_t k = 1; k <= options.c_max; ++k) {
    const auto outcome = search.run(k, options.node_budget);
    if (outcome == BoundedSearch::Outcome::kFound) {
      for (std::size_t j = 0; j < inner.size(); ++j) {
        if (search.values()[j] != 0) {
          out.g.add(std::span<const VertexId>(inner[j].data(), 3), search.values()[j]);
        }
      }
      for (std::size_t r = 0; r < row_edges.size(); ++r) {
        if (!slack[r].empty()) fill_slack(out.g, slack[r], search.residuals()[r], k);
      }
      out.exact = lower_complete;
      out.method = "bounded search";
      return finish(out);
    }
    if (outcome == BoundedSearch::Outcome::kBudget) lower_complete = false;
  }
  // Fall back to the lattice solution: an upper bound only.
  Chain interior(2, ring);
  for (std::size_t j = 0; j < inner.size(); ++j) {
    const BigInt& v = lattice.x[j];
    if (v == 0) continue;
    if (v > std::numeric_limits<std::int64_t>::max() / 4 || v < -std::numeric_limits<std::int64_t>::max() / 4) {
      throw std::overflow_error("h1_expansion_probe: lattice solution too large");
    }
    interior.add(std::span<const VertexId>(inner[j].data(), 3), v.convert_to<std::int64_t>());
  }
  out.g = interior;
  const Chain dg = interior.is_zero() ? Chain(1, ring) : boundary(interior);
  for (std::size_t r = 0; r < row_edges.size(); ++r) {
    if (slack[r].empty()) continue;
    const std::int64_t need = target[r] - dg.get({row_edges[r].first, row_edges[r].second});
    const std::int64_t m = static_cast<std::int64_t>(slack[r].size());
    const std::int64_t a = need < 0 ? -need : need;
    fill_slack(out.g, slack[r], need, std::max<std::int64_t>(1, (a + m - 1) / m));
  }
  out.exact = false;
  out.method = lower_complete ? "lattice solution (upper bound; no filling with norm <= c_max)"
                              : "lattice solution (upper bound)";
  return finish(out);
}

bool pure_filter(const RipsComplex& rips, const std::vector<bool>& U, const Chain& f) {
  const GraphWindow& w = rips.base();
  if (f.degree() != 1) throw PreconditionError("pure_filter: f must be a 1-chain");
  if (f.is_zero()) return true;
  const Ring ring = f.ring();
  const auto d = defects(w, f);
  for (std::size_t v = 0; v < d.size(); ++v) {
    // A defect on the window boundary cannot be closed inside the window.
    if (nonzero_in(ring, d[v]) && w.is_boundary(static_cast<VertexId>(v))) return false;
  }
  const Chain closed = finite_extension(w, U, f);
  if (closed.is_zero()) return true;
  const auto support = support_vertices(closed);
  const auto dist = bfs_distances(w, support.front());
  int reach = 0;
  for (VertexId v : support) reach = std::max(reach, dist[v]);
  reach += rips.radius();
  std::vector<bool> region(w.num_vertices(), false);
  for (std::size_t v = 0; v < dist.size(); ++v) region[v] = dist[v] != kUnreachable && dist[v] <= reach;

  std::vector<Triangle> tris;
  for (const Triangle& t : rips.triangles_touching(region)) {
    if (region[t[0]] && region[t[1]] && region[t[2]]) tris.push_back(t);
  }
  std::map<EdgeKey, std::size_t> row_of;
  auto row = [&](const EdgeKey& e) {
    return row_of.emplace(e, row_of.size()).first->second;
  };
  for (const auto& [s, c] : closed.terms()) row(edge_key(s[0], s[1]));
  for (const Triangle& t : tris) {
    for (const auto& [e, c] : faces(t)) row(e);
  }
  if (ring == Ring::kZ2) {
    std::vector<Bits> columns;
    for (const Triangle& t : tris) {
      Bits col(row_of.size());
      for (const auto& [e, c] : faces(t)) col.set(row_of.at(e));
      columns.push_back(std::move(col));
    }
    Bits rhs(row_of.size());
    for (const auto& [s, c] : closed.terms()) {
      if (odd(c)) rhs.set(row_of.at(edge_key(s[0], s[1])));
    }
    return gf2_solve(columns, rhs).feasible;
  }
  std::vector<SparseVec> columns;
  for (const Triangle& t : tris) {
    SparseVec col;
    for (const auto& [e, c] : faces(t)) col[row_of.at(e)] = c;
    columns.push_back(std::move(col));
  }
  SparseVec rhs;
  for (const auto& [s, c] : closed.terms()) {
    if (c != 0) rhs[row_of.at(edge_key(s[0], s[1]))] = c;
  }
  return int_solve(columns, rhs).feasible;
}

ExpansionReport summarize_probes(std::vector<ProbeSample> samples) {
  ExpansionReport out;
  out.samples = std::move(samples);
  for (const auto& s : out.samples) {
    if (!s.result.exact) out.all_exact = false;
    if (!s.result.feasible) {
      ++out.infeasible;
      continue;
    }
    auto [it, fresh] = out.k_table.emplace(s.input_norm, s.result.norm);
    if (!fresh) it->second = std::max(it->second, s.result.norm);
  }
  return out;
}

TriadReport triad_report(const FamilySpec& spec, const TriadOptions& options) {
  if (options.window_radii.empty()) throw PreconditionError("triad_report: no window radii");
  for (int r : options.window_radii) {
    if (r < 1) throw PreconditionError("triad_report: window radii must be positive");
  }
  TriadReport out;
  out.window_radii = options.window_radii;

  for (int radius : options.window_radii) {
    const GraphWindow w = build_window(spec, std::nullopt, radius);
    auto K = membership_mask(w, ball(w, w.center(), radius / 2));
    out.end_counts.push_back(pseudo_end_count(w, K));
  }
  out.ends = std::all_of(out.end_counts.begin(), out.end_counts.end(), [](int c) { return c >= 2; });

  try {
    out.profile = large_circuit_profile(spec, options.r_max, options.window_radii,
                                        options.margin, options.circuit_cap);
    out.large_circuits = !out.profile.stabilized;
  } catch (const CapExceeded& e) {
    out.notes.push_back(std::string("large-circuit profile skipped: ") + e.what());
    out.profile.r_max = options.r_max;
    out.profile.verdict = "cap exceeded";
  }

  std::vector<ProbeSample> samples;
  for (int rips_radius : options.rips_radii) {
    ProbeTrend trend;
    trend.rips_radius = rips_radius;
    bool any_sample = false, any_feasible = false;
    for (int radius : options.window_radii) {
      const GraphWindow w = build_window(spec, std::nullopt, radius);
      const RipsComplex rips(w, rips_radius);
      std::vector<bool> allowed(w.num_vertices());
      for (std::size_t v = 0; v < allowed.size(); ++v) allowed[v] = w.is_inner(static_cast<VertexId>(v), 2);
      std::vector<Circuit> circuits;
      try {
        circuits = enumerate_simple_circuits(w, 4, options.circuit_cap, &allowed);
      } catch (const CapExceeded& e) {
        out.notes.push_back(std::string("probe sampling truncated: ") + e.what());
      }
      const auto dist = bfs_distances(w, w.center());
      auto far = [&](const Circuit& c) {
        int m = 0;
        for (VertexId v : c.vertices) m = std::max(m, dist[v]);
        return m;
      };
      std::stable_sort(circuits.begin(), circuits.end(),
                       [&](const Circuit& a, const Circuit& b) { return far(a) < far(b); });
      if (static_cast<int>(circuits.size()) > options.probes_per_window) {
        circuits.resize(options.probes_per_window);
      }
      std::optional<std::int64_t> k;
      for (const Circuit& c : circuits) {
        std::vector<bool> U(w.num_vertices(), false);
        for (VertexId v : c.vertices) {
          U[v] = true;
          for (VertexId u : w.neighbors(v)) U[u] = true;
        }
        ProbeSample s;
        s.window_radius = radius;
        s.rips_radius = rips_radius;
        s.circuit = c.vertices;
        s.u_size = std::count(U.begin(), U.end(), true);
        const Chain f = circuit_chain(c.vertices, options.ring);
        s.input_norm = sup_norm(f);
        s.result = h1_expansion_probe(rips, U, f, options.probe);
        any_sample = true;
        if (s.result.feasible) {
          any_feasible = true;
          k = std::max(k.value_or(0), s.result.norm);
        }
        samples.push_back(std::move(s));
      }
      trend.k.push_back(k);
      trend.sampled.push_back(circuits.size());
    }
    if (any_sample && !any_feasible) {
      trend.evidence = true;
      trend.reason = "no filling of short circuits at Rips radius " + std::to_string(rips_radius);
    } else if (trend.k.size() >= 3) {
      bool growing = true;
      for (std::size_t i = 0; i < trend.k.size(); ++i) {
        if (!trend.k[i] || (i > 0 && *trend.k[i] <= *trend.k[i - 1])) growing = false;
      }
      if (growing) {
        trend.evidence = true;
        trend.reason = "minimal filling norm grows with the window radius";
      }
    }
    out.non_expansion = out.non_expansion || trend.evidence;
    out.trends.push_back(std::move(trend));
  }
  out.probes = summarize_probes(std::move(samples));
  out.notes.push_back("non-expansion evidence comes from finitely many probes (heuristic)");

  std::vector<std::string> texts;
  if (out.ends) {
    out.phenomena.push_back("ends");
    texts.push_back("ends >= 2");
  }
  if (out.large_circuits) {
    out.phenomena.push_back("large circuits");
    texts.push_back("large circuits");
  }
  if (out.non_expansion) {
    out.phenomena.push_back("non-expansion");
    texts.push_back("non-expansion evidence");
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
    return s;
  };
  out.verdict = out.phenomena.empty() ? "none" : join(out.phenomena);
  out.verdict_text = texts.empty() ? "no phenomenon detected" : join(texts);
  return out;
}

}  // namespace ufh
