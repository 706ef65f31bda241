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

#include "ufh/linear.hpp"

#include <stdexcept>

namespace ufh {

Gf2Solution gf2_solve(const std::vector<Bits>& columns, const Bits& rhs) {
  const std::size_t n = columns.size();
  struct Pivot {
    Bits vec;
    Bits combo;  // which columns sum to vec
  };
  std::map<std::size_t, Pivot> basis;  // leading row -> element
  Gf2Solution out;
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != rhs.size()) throw std::invalid_argument("gf2_solve: row count mismatch");
    Pivot p{columns[j], Bits(n)};
    p.combo.set(j);
    // Reduce in increasing leading order; each step clears the current lead.
    for (std::size_t lead = p.vec.find_first(); lead != Bits::npos; lead = p.vec.find_next(lead)) {
      auto it = basis.find(lead);
      if (it == basis.end()) break;
      p.vec ^= it->second.vec;
      p.combo ^= it->second.combo;
    }
    const std::size_t lead = p.vec.find_first();
    if (lead == Bits::npos) {
      out.kernel.push_back(std::move(p.combo));
    } else {
      basis.emplace(lead, std::move(p));
    }
  }
  Bits r = rhs;
  Bits x(n);
  for (std::size_t lead = r.find_first(); lead != Bits::npos; lead = r.find_first()) {
    auto it = basis.find(lead);
    if (it == basis.end()) return out;
    r ^= it->second.vec;
    x ^= it->second.combo;
  }
  out.feasible = true;
  out.x = std::move(x);
  return out;
}

Bits gf2_reduce_weight(Bits x, const std::vector<Bits>& kernel) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (const Bits& k : kernel) {
      Bits y = x ^ k;
      if (y.count() < x.count()) {
        x = std::move(y);
        improved = true;
      }
    }
  }
  return x;
}

namespace {

using SparseCombo = std::map<std::size_t, BigInt>;

void axpy(SparseVec& y, const BigInt& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    BigInt& t = y[k];
    t += a * v;
    if (t == 0) y.erase(k);
  }
}

// (g, s, t) with s a + t b = g = gcd(a, b) > 0.
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    BigInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

struct Element {
  SparseVec vec;
  SparseCombo combo;
};

}  // namespace

IntSolution int_solve(const std::vector<SparseVec>& columns, const SparseVec& rhs) {
  std::map<std::size_t, Element> basis;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Element v{columns[j], {{j, 1}}};
    while (!v.vec.empty()) {
      const std::size_t lead = v.vec.begin()->first;
      auto it = basis.find(lead);
      if (it == basis.end()) {
        basis.emplace(lead, std::move(v));
        break;
      }
      Element& b = it->second;
      const BigInt bp = b.vec.at(lead), vp = v.vec.at(lead);
      if (vp % bp == 0) {
        const BigInt q = -(vp / bp);
        axpy(v.vec, q, b.vec);
        axpy(v.combo, q, b.combo);
        continue;
      }
      BigInt g, s, t;
      ext_gcd(bp, vp, g, s, t);
      // [b'; v'] = [[s, t], [vp/g, -bp/g]] [b; v], determinant -1.
      Element nb, nv;
      axpy(nb.vec, s, b.vec);
      axpy(nb.vec, t, v.vec);
      axpy(nb.combo, s, b.combo);
      axpy(nb.combo, t, v.combo);
      axpy(nv.vec, vp / g, b.vec);
      axpy(nv.vec, -(bp / g), v.vec);
      axpy(nv.combo, vp / g, b.combo);
      axpy(nv.combo, -(bp / g), v.combo);
      b = std::move(nb);
      v = std::move(nv);
    }
  }
  IntSolution out;
  SparseVec r = rhs;
  SparseCombo x;
  while (!r.empty()) {
    const std::size_t lead = r.begin()->first;
    auto it = basis.find(lead);
    if (it == basis.end()) return out;
    const BigInt bp = it->second.vec.at(lead), rp = r.at(lead);
    if (rp % bp != 0) return out;
    const BigInt q = rp / bp;
    axpy(r, -q, it->second.vec);
    axpy(x, q, it->second.combo);
  }
  out.feasible = true;
  out.x.assign(columns.size(), 0);
  for (const auto& [j, v] : x) out.x[j] = v;
  // Independent re-check of A x = b.
  SparseVec check;
  for (std::size_t j = 0; j < columns.size(); ++j) axpy(check, out.x[j], columns[j]);
  SparseVec want = rhs;
  for (auto it = want.begin(); it != want.end();) it = it->second == 0 ? want.erase(it) : std::next(it);
  if (check != want) throw std::logic_error("int_solve: solution does not satisfy the system");
  return out;
}

}  // namespace ufh
