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

// Finitely supported simplicial chains over Z and Z/2.

#ifndef UFH_CHAIN_HPP_
#define UFH_CHAIN_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ufh/graph.hpp"

namespace ufh {

enum class Ring { kZ, kZ2 };

std::string ring_name(Ring ring);

// Vertices of a simplex in increasing order; unused slots hold -1.
using Simplex = std::array<VertexId, 3>;

// A chain of degree 0, 1 or 2. Terms are stored on the increasingly sorted
// vertex tuple; adding an oriented simplex multiplies by the sign of the
// sorting permutation. Degenerate simplices are dropped silently.
class Chain {
 public:
  Chain(int degree, Ring ring);

  int degree() const { return degree_; }
  Ring ring() const { return ring_; }

  // Adds coeff * (oriented simplex). The simplex must have degree() + 1
  // vertices.
  void add(std::span<const VertexId> simplex, std::int64_t coeff);
  void add(std::initializer_list<VertexId> simplex, std::int64_t coeff) {
    add(std::span<const VertexId>(simplex.begin(), simplex.size()), coeff);
  }
  // Coefficient of the oriented simplex (sign-adjusted).
  std::int64_t get(std::span<const VertexId> simplex) const;
  std::int64_t get(std::initializer_list<VertexId> simplex) const {
    return get(std::span<const VertexId>(simplex.begin(), simplex.size()));
  }

  const std::map<Simplex, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator-() const;
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(std::int64_t s, const Chain& c);
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  void add_sorted(const Simplex& s, std::int64_t coeff);

  int degree_;
  Ring ring_;
  std::map<Simplex, std::int64_t> terms_;
};

// Checked int64 arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Simplicial boundary. Throws PreconditionError for degree 0.
Chain boundary(const Chain& c);

// The boundary 0-chain of a 1-chain evaluated at every window vertex.
// defect[v] = (inflow - outflow) over Z, parity over Z/2.
std::vector<std::int64_t> defects(const GraphWindow& w, const Chain& c);

// True iff the boundary of `c` vanishes on every non-boundary vertex of `w`.
bool is_cycle(const GraphWindow& w, const Chain& c);
// Same with an explicit margin: defects allowed at vertices closer than
// `margin` to the window boundary.
bool is_cycle(const GraphWindow& w, const Chain& c, int margin);

std::int64_t sup_norm(const Chain& c);

// Coefficients mod 2, as a Z/2 chain.
Chain reduce_mod2(const Chain& c);

// Oriented edge chain of the walk v0 -> v1 -> ... -> vk.
Chain path_chain(std::span<const VertexId> walk, Ring ring);
// Edge chain of the closed walk v0 -> ... -> v_{k-1} -> v0.
Chain circuit_chain(std::span<const VertexId> cycle, Ring ring);

// Vertex set of the support.
std::vector<VertexId> support_vertices(const Chain& c);

}  // namespace ufh

#endif  // UFH_CHAIN_HPP_
