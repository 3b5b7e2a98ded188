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

#include "steiner/features.hpp"

#include <algorithm>
#include <cmath>

namespace steiner {

std::vector<double> clustering_coefficients(const Graph& g, bool weighted) {
  const int n = g.node_count();
  std::vector<double> c(n, 0.0);
  if (g.edge_count() == 0) return c;
  const double max_w = weighted ? static_cast<double>(g.max_weight()) : 1.0;

  for (int u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    const int deg = static_cast<int>(nb.size());
    if (deg < 2) continue;
    double sum = 0.0;
    for (int i = 0; i < deg; ++i) {
      for (int j = i + 1; j < deg; ++j) {
        int v = nb[i].first, w = nb[j].first;
        if (!g.has_edge(v, w)) continue;
        if (weighted) {
          double a = nb[i].second / max_w;
          double b = nb[j].second / max_w;
          double cvw = g.edge_weight(v, w) / max_w;
          sum += 2.0 * std::cbrt(a * b * cvw);
        } else {
          sum += 2.0;
        }
      }
    }
    c[u] = sum / (static_cast<double>(deg) * (deg - 1));
  }
  return c;
}

FeatureMatrix node_features(const StpInstance& instance) {
  const Graph& g = instance.graph();
  const int n = g.node_count();
  const std::vector<int>& terms = instance.terminals();

  FeatureMatrix f;
  f.rows = n;
  f.data.assign(static_cast<std::size_t>(n) * kFeatureCount, 0.0);
  auto cell = [&](int r, int c) -> double& {
    return f.data[static_cast<std::size_t>(r) * kFeatureCount + c];
  };

  // Weighted diameter from all-pairs shortest paths (throws when
  // disconnected, which instances never are).
  std::vector<std::vector<Cost>> dist = all_pairs_shortest_paths(g);
  Cost diameter = 0;
  for (const auto& row : dist)
    for (Cost d : row) diameter = std::max(diameter, d);
  // A connected graph with >= 2 nodes has positive diameter; guard the
  // single-node case anyway to keep the division defined.
  double diam = diameter > 0 ? static_cast<double>(diameter) : 1.0;
  f.diameter = diam / static_cast<double>(g.weight_denominator());

  std::vector<double> clus = clustering_coefficients(g, true);

  const int k = static_cast<int>(terms.size());
  const int pairs = k * (k - 1) / 2;
  for (int v = 0; v < n; ++v) {
    Cost nearest = kUnreachable;
    Cost total = 0;
    for (int t : terms) {
      nearest = std::min(nearest, dist[v][t]);
      total += dist[v][t];
    }
    int on_path = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (dist[terms[i]][v] + dist[v][terms[j]] == dist[terms[i]][terms[j]])
          ++on_path;
    cell(v, 0) = instance.is_terminal(v) ? 1.0 : 0.0;
    cell(v, 1) = n > 1 ? static_cast<double>(g.degree(v)) / (n - 1) : 0.0;
    cell(v, 2) = clus[v];
    cell(v, 3) = static_cast<double>(nearest) / diam;
    cell(v, 4) = static_cast<double>(total) / terms.size() / diam;
    cell(v, 5) = pairs > 0 ? static_cast<double>(on_path) / pairs : 0.0;
  }
  return f;
}

}  // namespace steiner
