// Copyright 2026 The SteinerKit Authors
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

#ifndef STEINER_EXACT_HPP_
#define STEINER_EXACT_HPP_

#include <cstdint>
#include <string>

#include "steiner/graph.hpp"

namespace steiner {

struct ExactResult {
  SteinerTree tree;
  Cost optimal_cost = 0;
  // Work counter: terminal subsets processed by the dynamic program, or
  // non-terminal subsets enumerated by the brute-force search.
  std::uint64_t subsets_explored = 0;
  double seconds = 0.0;
};

// Optimal Steiner tree by the terminal-subset dynamic program
// dp[S][v] = cost of the best tree connecting terminal set S to node v,
// combining subset merges at v with shortest-path extensions. Runs in
// O(3^k n + 2^k Dijkstra) for k terminals; refuses instances with more than
// `terminal_cap` terminals since time and memory grow exponentially in k.
ExactResult dreyfus_wagner(const StpInstance& instance, int terminal_cap = 14);

// Independent reference solver: enumerates every subset of non-terminal
// nodes, keeps those whose induced subgraph is connected, and takes the
// cheapest pruned MST. Only for cross-checking; requires n <= 12.
ExactResult brute_force_steiner(const StpInstance& instance);

struct VerifyResult {
  bool valid = false;
  Cost cost = 0;          // meaningful only when valid
  std::string reason;     // why validation failed
};

// Checks that `tree` uses existing edges, is acyclic and connected, and
// spans every terminal of the instance; recomputes the cost from the graph.
VerifyResult verify_steiner_tree(const StpInstance& instance,
                                 const SteinerTree& tree);

}  // namespace steiner

#endif  // STEINER_EXACT_HPP_
