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

#include "ufh/chain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ufh {

std::string ring_name(Ring ring) { return ring == Ring::kZ ? "Z" : "Z2"; }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in chain arithmetic");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in chain arithmetic");
  }
  return out;
}

Chain::Chain(int degree, Ring ring) : degree_(degree), ring_(ring) {
  if (degree < 0 || degree > 2) throw PreconditionError("chain degree must be 0, 1 or 2");
}

namespace {

// Sorts the simplex in place and returns the permutation sign, or 0 when a
// vertex repeats.
int canonicalize(std::span<const VertexId> in, Simplex& out) {
  out = {-1, -1, -1};
  std::copy(in.begin(), in.end(), out.begin());
  const std::size_t n = in.size();
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n - i; ++j) {
      if (out[j] > out[j + 1]) {
        std::swap(out[j], out[j + 1]);
        sign = -sign;
      } else if (out[j] == out[j + 1]) {
        return 0;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (out[j] == out[j + 1]) return 0;
  }
  return sign;
}

}  // namespace

void Chain::add_sorted(const Simplex& s, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(s);
  std::int64_t value = it == terms_.end() ? 0 : it->second;
  if (ring_ == Ring::kZ2) {
    value = (value + (coeff & 1)) & 1;
  } else {
    value = checked_add(value, coeff);
  }
  if (value == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(s, value);
  } else {
    it->second = value;
  }
}

void Chain::add(std::span<const VertexId> simplex, std::int64_t coeff) {
  if (static_cast<int>(simplex.size()) != degree_ + 1) {
    throw PreconditionError("simplex size does not match chain degree");
  }
  Simplex s;
  const int sign = canonicalize(simplex, s);
  if (sign == 0) return;
  add_sorted(s, ring_ == Ring::kZ ? checked_mul(sign, coeff) : coeff);
}

std::int64_t Chain::get(std::span<const VertexId> simplex) const {
  Simplex s;
  const int sign = canonicalize(simplex, s);
  if (sign == 0) return 0;
  auto it = terms_.find(s);
  if (it == terms_.end()) return 0;
  return ring_ == Ring::kZ ? sign * it->second : it->second;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.degree_ != degree_ || other.ring_ != ring_) {
    throw PreconditionError("adding chains of different degree or ring");
  }
  for (const auto& [s, c] : other.terms_) add_sorted(s, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) { return *this += -other; }

Chain Chain::operator-() const {
  Chain out(degree_, ring_);
  for (const auto& [s, c] : terms_) {
    out.terms_.emplace(s, ring_ == Ring::kZ ? checked_mul(-1, c) : c);
  }
  return out;
}

Chain operator*(std::int64_t s, const Chain& c) {
  Chain out(c.degree_, c.ring_);
  for (const auto& [simplex, coeff] : c.terms_) {
    out.add_sorted(simplex, checked_mul(s, coeff));
  }
  return out;
}

Chain boundary(const Chain& c) {
  if (c.degree() == 0) throw PreconditionError("boundary of a 0-chain");
  Chain out(c.degree() - 1, c.ring());
  for (const auto& [s, coeff] : c.terms()) {
    if (c.degree() == 1) {
      out.add({s[1]}, coeff);
      out.add({s[0]}, -coeff);
    } else {
      out.add({s[1], s[2]}, coeff);
      out.add({s[0], s[2]}, -coeff);
      out.add({s[0], s[1]}, coeff);
    }
  }
  return out;
}

std::vector<std::int64_t> defects(const GraphWindow& w, const Chain& c) {
  if (c.degree() != 1) throw PreconditionError("defects need a 1-chain");
  std::vector<std::int64_t> out(w.num_vertices(), 0);
  const Chain d = boundary(c);
  for (const auto& [s, coeff] : d.terms()) out.at(s[0]) = coeff;
  return out;
}

bool is_cycle(const GraphWindow& w, const Chain& c) { return is_cycle(w, c, 1); }

bool is_cycle(const GraphWindow& w, const Chain& c, int margin) {
  if (c.degree() != 1) return false;
  const Chain d = boundary(c);
  for (const auto& [s, coeff] : d.terms()) {
    if (w.is_inner(s[0], margin)) return false;
  }
  return true;
}

std::int64_t sup_norm(const Chain& c) {
  std::int64_t best = 0;
  for (const auto& [s, coeff] : c.terms()) {
    best = std::max(best, coeff < 0 ? checked_mul(-1, coeff) : coeff);
  }
  return best;
}

Chain reduce_mod2(const Chain& c) {
  Chain out(c.degree(), Ring::kZ2);
  for (const auto& [s, coeff] : c.terms()) {
    std::span<const VertexId> verts(s.data(), c.degree() + 1);
    out.add(verts, coeff);
  }
  return out;
}

Chain path_chain(std::span<const VertexId> walk, Ring ring) {
  Chain out(1, ring);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    out.add({walk[i], walk[i + 1]}, 1);
  }
  return out;
}

Chain circuit_chain(std::span<const VertexId> cycle, Ring ring) {
  Chain out(1, ring);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.add({cycle[i], cycle[(i + 1) % cycle.size()]}, 1);
  }
  return out;
}

std::vector<VertexId> support_vertices(const Chain& c) {
  std::set<VertexId> verts;
  for (const auto& [s, coeff] : c.terms()) {
    for (int i = 0; i <= c.degree(); ++i) verts.insert(s[i]);
  }
  return {verts.begin(), verts.end()};
}

}  // namespace ufh
