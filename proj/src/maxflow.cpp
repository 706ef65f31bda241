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

#include "ufh/maxflow.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

namespace ufh {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using Graph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, std::int64_t,
                    boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                    boost::property<boost::edge_reverse_t,
                                                    Traits::edge_descriptor>>>>;

}  // namespace

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  arcs_.push_back({from, to, capacity});
  return static_cast<int>(arcs_.size() - 1);
}

std::int64_t FlowNetwork::solve(int source, int sink) {
  Graph g(num_nodes_);
  auto cap = boost::get(boost::edge_capacity, g);
  auto res = boost::get(boost::edge_residual_capacity, g);
  auto rev = boost::get(boost::edge_reverse, g);
  std::vector<Traits::edge_descriptor> handles;
  handles.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    auto e = boost::add_edge(a.from, a.to, g).first;
    auto r = boost::add_edge(a.to, a.from, g).first;
    cap[e] = a.capacity;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
    handles.push_back(e);
  }
  const std::int64_t value = boost::push_relabel_max_flow(g, source, sink);
  flow_.assign(arcs_.size(), 0);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    flow_[i] = cap[handles[i]] - res[handles[i]];
  }
  return value;
}

}  // namespace ufh
