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

#ifndef STEINER_GRAPH_HPP_
#define STEINER_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace steiner {

// All toolkit errors derive from this type; the C layer maps it to an error
// code plus message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge weights are kept as exact integers: a graph stores numerator weights
// plus a single positive denominator, so decimal weights read from files
// (e.g. 2.5) become (25, 10) and every cost comparison in the solvers and
// heuristics is exact. Generated graphs use denominator 1.
using Cost = std::int64_t;

// Sentinel for "no path". Large enough to survive one addition without
// overflow, which is all the shortest-path relaxations need.
inline constexpr Cost kUnreachable = std::numeric_limits<Cost>::max() / 4;

struct Edge {
  int u = 0;
  int v = 0;
  Cost w = 0;  // numerator; actual weight is w / denominator
};

// Simple undirected weighted graph with contiguous node ids 0..n-1.
// Construction normalizes each edge to u < v, sorts the edge list by (u, v)
// and rejects self-loops, duplicate edges and non-positive weights.
class Graph {
 public:
  Graph(int node_count, std::vector<Edge> edges, Cost weight_denominator = 1);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  Cost weight_denominator() const { return denom_; }

  // Neighbors of u as (node, weight) pairs, sorted by node id.
  const std::vector<std::pair<int, Cost>>& neighbors(int u) const {
    check_node(u);
    return adj_[u];
  }
  int degree(int u) const {
    check_node(u);
    return static_cast<int>(adj_[u].size());
  }
  bool has_edge(int u, int v) const;
  // Weight numerator of edge (u, v); throws Error if the edge is absent.
  Cost edge_weight(int u, int v) const;
  // Largest weight numerator in the graph (graphs here always have >= 1 edge
  // at the call sites that need this; throws on an edgeless graph).
  Cost max_weight() const;

  void check_node(int u) const {
    if (u < 0 || u >= n_)
      throw Error("node id " + std::to_string(u) + " out of range [0, " +
                  std::to_string(n_) + ")");
  }

 private:
  int n_;
  Cost denom_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, Cost>>> adj_;
};

// A problem instance: a connected graph plus at least two terminal nodes.
// `id` names the instance in datasets and reports; `seed` is carried along
// for provenance when the instance came out of a generator.
class StpInstance {
 public:
  StpInstance(Graph graph, std::vector<int> terminals, std::string id,
              std::optional<std::uint64_t> seed = std::nullopt);

  const Graph& graph() const { return graph_; }
  const std::vector<int>& terminals() const { return terminals_; }  // sorted
  const std::string& id() const { return id_; }
  const std::optional<std::uint64_t>& seed() const { return seed_; }
  bool is_terminal(int v) const;

 private:
  Graph graph_;
  std::vector<int> terminals_;
  std::string id_;
  std::optional<std::uint64_t> seed_;
};

// A tree returned by a solver or heuristic: explicit edge list plus its
// exact cost numerator (denominator is the owning graph's).
struct SteinerTree {
  std::vector<Edge> edges;  // normalized u < v, sorted by (u, v)
  Cost cost = 0;

  // Sorted set of nodes touched by the tree's edges.
  std::vector<int> nodes() const;
};

// Builds a SteinerTree from endpoint pairs, pulling weights (and the cost
// sum) from the graph. Throws if an edge is absent from the graph.
SteinerTree make_tree(const Graph& g, const std::vector<std::pair<int, int>>& edges);

struct ShortestPaths {
  std::vector<Cost> dist;  // kUnreachable where no path exists
  std::vector<int> pred;   // -1 for the source and unreachable nodes
};

// Dijkstra from `source`. Ties between equal-cost paths are broken toward
// the smaller predecessor id so that reconstructed paths are deterministic.
ShortestPaths shortest_paths(const Graph& g, int source);

// Distance matrix between all node pairs. Throws Error when the graph is
// disconnected, since every caller here requires finite distances.
std::vector<std::vector<Cost>> all_pairs_shortest_paths(const Graph& g);

// Kruskal minimum spanning tree; edges are considered in (weight, u, v)
// order so the result is deterministic even with ties. Throws Error when the
// graph is disconnected.
SteinerTree minimum_spanning_tree(const Graph& g);

struct InducedSubgraph {
  Graph graph;                   // nodes relabeled 0..k-1
  std::vector<int> to_original;  // new id -> original id, ascending
};

// Subgraph induced by `nodes` (deduplicated). Node ids are compacted in
// ascending original order so the mapping is recoverable.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> nodes);

bool is_connected(const Graph& g);
// Connectivity of the subgraph induced by `nodes` (must be non-empty).
bool is_connected(const Graph& g, const std::vector<int>& nodes);

// Repeatedly removes degree-1 nodes that are not terminals, returning the
// reduced tree with its cost recomputed from `g`. The input edge set must
// form a tree containing every terminal.
SteinerTree prune_nonterminal_leaves(const Graph& g, const SteinerTree& tree,
                                     const std::vector<int>& terminals);

struct GraphStats {
  double density = 0.0;  // 2m / (n(n-1))
  int radius = 0;        // min over nodes of max hop distance
};

// Density and hop radius of a connected graph with n >= 2.
GraphStats graph_stats(const Graph& g);

}  // namespace steiner

#endif  // STEINER_GRAPH_HPP_
