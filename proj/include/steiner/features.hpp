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

#ifndef STEINER_FEATURES_HPP_
#define STEINER_FEATURES_HPP_

#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Version tag stored inside trained models; prediction refuses to run when
// the model was built against a different feature layout.
inline constexpr const char* kFeatureSchemaVersion = "stp-features-v1";
inline constexpr int kFeatureCount = 6;

// Per-node clustering coefficient. Unweighted: triangle density among
// neighbor pairs. Weighted: geometric-mean triangle intensity
//   c_u = 1/(deg(u)(deg(u)-1)) * sum_{v,w} (a_uv * a_uw * a_vw)^(1/3)
// over ordered neighbor pairs, with a_xy the edge weight divided by the
// maximum weight in the graph. Nodes of degree < 2 get 0. With all weights
// equal the weighted value reduces exactly to the unweighted one.
std::vector<double> clustering_coefficients(const Graph& g, bool weighted);

// Row-major n x kFeatureCount matrix; columns are
//   0: terminal indicator (1 for terminals)
//   1: degree / (n-1)
//   2: weighted clustering coefficient
//   3: distance to the nearest terminal / weighted diameter
//   4: mean distance over all terminals / weighted diameter
//   5: share of terminal pairs (s, t) with d(s,v) + d(v,t) = d(s,t),
//      i.e. how often v lies on some shortest path between terminals
// All values lie in [0, 1]; terminals have column 3 equal to 0.
struct FeatureMatrix {
  int rows = 0;
  int cols = kFeatureCount;
  std::vector<double> data;
  double diameter = 0.0;  // weighted diameter used for normalization

  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

FeatureMatrix node_features(const StpInstance& instance);

}  // namespace steiner

#endif  // STEINER_FEATURES_HPP_
