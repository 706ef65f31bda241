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

#include "ufh/cyclespace.hpp"

#include <algorithm>

namespace ufh {

EdgeSet edge_set(const GraphWindow& w, const Chain& c) {
  if (c.degree() != 1) throw PreconditionError("edge_set: need a 1-chain");
  EdgeSet out(w.num_edges());
  for (const auto& [e, coeff] : c.terms()) {
    if (coeff % 2 != 0) out.set(w.edge_id(e[0], e[1]));
  }
  return out;
}

EdgeSet edge_set_of_cycle(const GraphWindow& w, const std::vector<VertexId>& cycle) {
  EdgeSet out(w.num_edges());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.flip(w.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return out;
}

std::size_t leading_index(const EdgeSet& s) { return s.find_first(); }

namespace {

class CircuitSearch {
 public:
  CircuitSearch(const GraphWindow& w, int max_len, std::size_t cap,
                const std::vector<bool>* allowed)
      : w_(w), max_len_(max_len), cap_(cap), allowed_(allowed),
        on_path_(w.num_vertices(), false) {}

  std::vector<Circuit> run() {
    for (std::size_t s = 0; s < w_.num_vertices(); ++s) {
      if (!ok(static_cast<VertexId>(s))) continue;
      start_ = static_cast<VertexId>(s);
      path_ = {start_};
      on_path_[s] = true;
      extend();
      on_path_[s] = false;
    }
    std::sort(out_.begin(), out_.end(), [](const Circuit& a, const Circuit& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.edges < b.edges;
    });
    return std::move(out_);
  }

 private:
  bool ok(VertexId v) const { return allowed_ == nullptr || (*allowed_)[v]; }

  void extend() {
    const VertexId cur = path_.back();
    for (VertexId u : w_.neighbors(cur)) {
      if (u == start_ && path_.size() >= 3 && path_[1] < path_.back()) {
        record();
        continue;
      }
      if (u <= start_ || on_path_[u] || !ok(u)) continue;
      if (static_cast<int>(path_.size()) >= max_len_) continue;
      on_path_[u] = true;
      path_.push_back(u);
      extend();
      path_.pop_back();
      on_path_[u] = false;
    }
  }

  void record() {
    if (out_.size() >= cap_) {
      throw CapExceeded("enumerate_simple_circuits: more than " +
                        std::to_string(cap_) + " circuits");
    }
    Circuit c;
    c.vertices = path_;
    c.set = EdgeSet(w_.num_edges());
    for (std::size_t i = 0; i < path_.size(); ++i) {
      const EdgeId e = w_.edge_id(path_[i], path_[(i + 1) % path_.size()]);
      c.edges.push_back(e);
      c.set.set(e);
    }
    std::sort(c.edges.begin(), c.edges.end());
    out_.push_back(std::move(c));
  }

  const GraphWindow& w_;
  int max_len_;
  std::size_t cap_;
  const std::vector<bool>* allowed_;
  std::vector<bool> on_path_;
  std::vector<VertexId> path_;
  VertexId start_ = 0;
  std::vector<Circuit> out_;
};

}  // namespace

std::vector<Circuit> enumerate_simple_circuits(const GraphWindow& w, int max_len,
                                               std::size_t cap,
                                               const std::vector<bool>* allowed) {
  if (max_len < 3) throw PreconditionError("enumerate_simple_circuits: bound < 3");
  return CircuitSearch(w, max_len, cap, allowed).run();
}

std::size_t FilteredCycleBasis::prefix_size(int length) const {
  return std::upper_bound(lengths.begin(), lengths.end(), length) - lengths.begin();
}

FilteredCycleBasis gaussian_leading_basis(const std::vector<EdgeSet>& rows,
                                          const std::vector<int>& lengths,
                                          std::size_t num_edges) {
  if (rows.size() != lengths.size()) {
    throw PreconditionError("gaussian_leading_basis: rows and lengths differ");
  }
  FilteredCycleBasis b;
  b.num_edges = num_edges;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EdgeSet row = rows[i];
    std::vector<int> used;
    for (std::size_t t = 0; t < b.elements.size(); ++t) {
      if (row.test(b.leading[t])) {
        row ^= b.elements[t];
        used.push_back(static_cast<int>(t));
      }
    }
    if (row.any()) {
      used.push_back(static_cast<int>(b.elements.size()));
      b.leading.push_back(leading_index(row));
      b.elements.push_back(std::move(row));
      b.lengths.push_back(lengths[i]);
    }
    b.representation.push_back(std::move(used));
  }
  return b;
}

FilteredCycleBasis gaussian_leading_basis(const std::vector<Circuit>& circuits,
                                          std::size_t num_edges) {
  std::vector<EdgeSet> rows;
  std::vector<int> lengths;
  for (const auto& c : circuits) {
    rows.push_back(c.set);
    lengths.push_back(static_cast<int>(c.length()));
  }
  return gaussian_leading_basis(rows, lengths, num_edges);
}

Membership membership(const EdgeSet& f, const FilteredCycleBasis& basis,
                      int length_cap) {
  const std::size_t limit =
      length_cap < 0 ? basis.elements.size() : basis.prefix_size(length_cap);
  Membership out;
  out.residue = f;
  for (std::size_t t = 0; t < limit; ++t) {
    if (out.residue.test(basis.leading[t])) {
      out.residue ^= basis.elements[t];
      out.coefficients.push_back(static_cast<int>(t));
    }
  }
  out.member = out.residue.none();
  if (!out.member) out.coefficients.clear();
  return out;
}

WindowProfile interior_profile(const GraphWindow& w, int r_max, int margin,
                               std::size_t cap) {
  WindowProfile p;
  p.window_radius = w.radius();
  p.margin = margin;
  std::vector<bool> interior(w.num_vertices());
  for (std::size_t v = 0; v < w.num_vertices(); ++v) {
    interior[v] = w.is_inner(static_cast<VertexId>(v), margin);
  }
  auto circuits = enumerate_simple_circuits(w, r_max, cap, &interior);
  p.circuits = circuits.size();
  auto basis = gaussian_leading_basis(circuits, w.num_edges());
  std::size_t prev = 0;
  for (int r = 3; r <= r_max; ++r) {
    ProfileRow row{r, basis.prefix_size(r), 0};
    row.new_elements = row.dimension - prev;
    if (row.new_elements > 0) p.stable_from = r;
    prev = row.dimension;
    p.rows.push_back(row);
  }
  return p;
}

LargeCircuitProfile large_circuit_profile(const FamilySpec& spec, int r_max,
                                          const std::vector<int>& window_radii,
                                          int margin, std::size_t cap) {
  if (window_radii.empty()) throw PreconditionError("large_circuit_profile: no radii");
  LargeCircuitProfile out;
  out.r_max = r_max;
  for (int radius : window_radii) {
    const int m = margin < 0 ? radius / 4 : margin;
    if (m >= radius) {
      throw PreconditionError("large_circuit_profile: window too small for margin");
    }
    auto w = build_window(spec, std::nullopt, radius);
    out.windows.push_back(interior_profile(w, r_max, m, cap));
  }
  const auto& last = out.windows.back();
  out.r0 = last.stable_from;
  out.stabilized = out.windows.size() >= 2 &&
                   out.windows[out.windows.size() - 2].stable_from == last.stable_from &&
                   last.stable_from < r_max;
  out.verdict = out.stabilized ? "stabilized at r=" + std::to_string(out.r0)
                               : "large circuits up to r=" + std::to_string(r_max);
  return out;
}

}  // namespace ufh
