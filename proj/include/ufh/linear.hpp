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

// Exact solvers for A x = b over GF(2) and over the integers. Matrices are
// given column by column.

#ifndef UFH_LINEAR_HPP_
#define UFH_LINEAR_HPP_

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <vector>

namespace ufh {

using Bits = boost::dynamic_bitset<>;

struct Gf2Solution {
  bool feasible = false;
  Bits x;                    // one solution, when feasible
  std::vector<Bits> kernel;  // basis of {x : A x = 0}
};

// columns[j] has one bit per row; rhs has the same length.
Gf2Solution gf2_solve(const std::vector<Bits>& columns, const Bits& rhs);

// Greedily lowers the popcount of x by adding kernel vectors until no single
// kernel vector helps.
Bits gf2_reduce_weight(Bits x, const std::vector<Bits>& kernel);

using BigInt = boost::multiprecision::cpp_int;
using SparseVec = std::map<std::size_t, BigInt>;  // row -> nonzero entry

struct IntSolution {
  bool feasible = false;
  std::vector<BigInt> x;  // one integer solution, when feasible
};

// Integer solvability of A x = b through an echelon basis of the column
// lattice built with unimodular (extended gcd) steps.
IntSolution int_solve(const std::vector<SparseVec>& columns, const SparseVec& rhs);

}  // namespace ufh

#endif  // UFH_LINEAR_HPP_
