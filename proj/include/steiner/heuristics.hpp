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

#ifndef STEINER_HEURISTICS_HPP_
#define STEINER_HEURISTICS_HPP_

#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Nodes scoring at or above this are treated as predicted tree members.
inline constexpr double kPredictedThreshold = 0.5;

// Both heuristics turn per-node inclusion scores into a tree. `scores`
// holds one value per node; terminal entries are ignored (terminals are
// always included). Results are valid trees spanning the terminals.

// Induced-subgraph heuristic: start from the terminals plus every node
// scoring >= kPredictedThreshold; while the working set's induced subgraph
// is disconnected, add the highest-scoring remaining node (ties toward the
// smaller id). Return the pruned MST of the final induced subgraph.
SteinerTree h1_induced_mst(const StpInstance& instance,
                           const std::vector<double>& scores);

// Terminal-promotion heuristic: run the 2-approximation with the original
// terminal set, then repeatedly promote nodes to temporary terminals -
// first every node scoring >= kPredictedThreshold (best first), then, while
// the working set's induced subgraph stays disconnected, further nodes by
// descending score - rerunning the 2-approximation after each promotion.
// Every candidate tree is pruned against the original terminals; the
// cheapest one wins. Never worse than the plain 2-approximation.
SteinerTree h2_terminal_promotion(const StpInstance& instance,
                                  const std::vector<double>& scores);

}  // namespace steiner

#endif  // STEINER_HEURISTICS_HPP_
