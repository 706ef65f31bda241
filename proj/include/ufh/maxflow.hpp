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

#ifndef UFH_MAXFLOW_HPP_
#define UFH_MAXFLOW_HPP_

#include <cstdint>
#include <vector>

namespace ufh {

// Directed integer network solved with Boost's push-relabel.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes) : num_nodes_(num_nodes) {}

  // Returns an arc handle for flow().
  int add_arc(int from, int to, std::int64_t capacity);
  std::int64_t solve(int source, int sink);
  // Flow on the arc after solve().
  std::int64_t flow(int arc) const { return flow_.at(arc); }

 private:
  struct Arc {
    int from;
    int to;
    std::int64_t capacity;
  };
  int num_nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::int64_t> flow_;
};

}  // namespace ufh

#endif  // UFH_MAXFLOW_HPP_
