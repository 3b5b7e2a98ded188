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

#include "steiner/approx.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace steiner {

MetricClosure metric_closure(const StpInstance& instance) {
  const Graph& g = instance.graph();
  const std::vector<int>& terms = instance.terminals();
  const int k = static_cast<int>(terms.size());

  MetricClosure mc;
  mc.terminals = terms;
  mc.dist.assign(k, std::vector<Cost>(k, 0));
  mc.paths.assign(k, std::vector<std::vector<int>>(k));

  for (int i = 0; i < k; ++i) {
    ShortestPaths sp = shortest_paths(g, terms[i]);
    for (int j = 0; j < k; ++j) {
      if (sp.dist[terms[j]] >= kUnreachable)
        throw Error("terminals are not connected");
      mc.dist[i][j] = sp.dist[terms[j]];
      // Walk predecessors back from terms[j] to terms[i].
      std::vector<int> path;
      for (int v = terms[j]; v != -1; v = sp.pred[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      mc.paths[i][j] = std::move(path);
    }
  }
  return mc;
}

SteinerTree two_approx(const StpInstance& instance) {
  const Graph& g = instance.graph();
  MetricClosure mc = metric_closure(instance);
  const int k = static_cast<int>(mc.terminals.size());

  // Kruskal on the closure; (distance, i, j) ordering keeps ties stable.
  std::vector<std::tuple<Cost, int, int>> closure_edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      closure_edges.emplace_back(mc.dist[i][j], i, j);
  std::sort(closure_edges.begin(), closure_edges.end());

  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  // Union of the witness paths of the closure MST's edges.
  std::set<std::pair<int, int>> path_edges;
  int joined = 0;
  for (const auto& [d, i, j] : closure_edges) {
    int ri = find(i), rj = find(j);
    if (ri == rj) continue;
    parent[ri] = rj;
    ++joined;
    const std::vector<int>& path = mc.paths[i][j];
    for (std::size_t s = 1; s < path.size(); ++s)
      path_edges.emplace(std::min(path[s - 1], path[s]),
                         std::max(path[s - 1], path[s]));
    if (joined == k - 1) break;
  }

  // Second MST over the path-union subgraph, then leaf pruning.
  std::vector<int> nodes;
  std::vector<Edge> sub_edges;
  {
    std::set<int> node_set;
    for (const auto& [u, v] : path_edges) {
      node_set.insert(u);
      node_set.insert(v);
    }
    nodes.assign(node_set.begin(), node_set.end());
  }
  std::vector<int> to_new(g.node_count(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    to_new[nodes[i]] = static_cast<int>(i);
  for (const auto& [u, v] : path_edges)
    sub_edges.push_back({to_new[u], to_new[v], g.edge_weight(u, v)});

  Graph sub(static_cast<int>(nodes.size()), std::move(sub_edges),
            g.weight_denominator());
  SteinerTree mst = minimum_spanning_tree(sub);
  std::vector<int> local_terms;
  for (int t : mc.terminals) local_terms.push_back(to_new[t]);
  SteinerTree pruned = prune_nonterminal_leaves(sub, mst, local_terms);

  std::vector<std::pair<int, int>> mapped;
  for (const Edge& e : pruned.edges)
    mapped.emplace_back(nodes[e.u], nodes[e.v]);
  return make_tree(g, mapped);
}

}  // namespace steiner
