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

#ifndef STEINER_APPROX_HPP_
#define STEINER_APPROX_HPP_

#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Pairwise shortest-path distances between terminals, with one witness
// path per ordered pair. paths[i][j] lists the nodes from terminals[i] to
// terminals[j]; ties are resolved by the deterministic Dijkstra
// predecessor rule, so closures are reproducible.
struct MetricClosure {
  std::vector<int> terminals;
  std::vector<std::vector<Cost>> dist;
  std::vector<std::vector<std::vector<int>>> paths;
};

MetricClosure metric_closure(const StpInstance& instance);

// Classic distance-network heuristic: MST of the terminal metric closure,
// expanded back into graph paths, reduced by a second MST, then stripped of
// non-terminal leaves. Cost is at most 2(1 - 1/|T|) times optimal.
SteinerTree two_approx(const StpInstance& instance);

}  // namespace steiner

#endif  // STEINER_APPROX_HPP_
