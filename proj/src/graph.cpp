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

#include "steiner/graph.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace steiner {
namespace {

// Union-find with path halving; used by Kruskal and the tree validators.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns false when x and y were already in the same set.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent_[rx] = ry;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Graph::Graph(int node_count, std::vector<Edge> edges, Cost weight_denominator)
    : n_(node_count), denom_(weight_denominator), edges_(std::move(edges)) {
  if (n_ < 1) throw Error("graph must have at least one node");
  if (denom_ < 1) throw Error("weight denominator must be positive");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw Error("edge endpoint out of range");
    if (e.u == e.v)
      throw Error("self-loop at node " + std::to_string(e.u));
    if (e.w <= 0) throw Error("edge weights must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw Error("duplicate edge (" + std::to_string(edges_[i].u) + ", " +
                  std::to_string(edges_[i].v) + ")");
  }
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  check_node(u);
  check_node(v);
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(),
                             std::make_pair(v, std::numeric_limits<Cost>::min()));
  return it != nb.end() && it->first == v;
}

Cost Graph::edge_weight(int u, int v) const {
  check_node(u);
  check_node(v);
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(),
                             std::make_pair(v, std::numeric_limits<Cost>::min()));
  if (it == nb.end() || it->first != v)
    throw Error("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  return it->second;
}

Cost Graph::max_weight() const {
  if (edges_.empty()) throw Error("graph has no edges");
  Cost m = 0;
  for (const Edge& e : edges_) m = std::max(m, e.w);
  return m;
}

StpInstance::StpInstance(Graph graph, std::vector<int> terminals, std::string id,
                         std::optional<std::uint64_t> seed)
    : graph_(std::move(graph)),
      terminals_(std::move(terminals)),
      id_(std::move(id)),
      seed_(seed) {
  std::sort(terminals_.begin(), terminals_.end());
  terminals_.erase(std::unique(terminals_.begin(), terminals_.end()),
                   terminals_.end());
  if (terminals_.size() < 2)
    throw Error("instance needs at least two distinct terminals");
  for (int t : terminals_) graph_.check_node(t);
  if (!is_connected(graph_)) throw Error("instance graph is not connected");
}

bool StpInstance::is_terminal(int v) const {
  return std::binary_search(terminals_.begin(), terminals_.end(), v);
}

std::vector<int> SteinerTree::nodes() const {
  std::vector<int> out;
  out.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SteinerTree make_tree(const Graph& g,
                      const std::vector<std::pair<int, int>>& edges) {
  SteinerTree t;
  t.edges.reserve(edges.size());
  for (auto [u, v] : edges) {
    Cost w = g.edge_weight(u, v);
    if (u > v) std::swap(u, v);
    t.edges.push_back({u, v, w});
    t.cost += w;
  }
  std::sort(t.edges.begin(), t.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return t;
}

ShortestPaths shortest_paths(const Graph& g, int source) {
  g.check_node(source);
  const int n = g.node_count();
  ShortestPaths sp;
  sp.dist.assign(n, kUnreachable);
  sp.pred.assign(n, -1);
  sp.dist[source] = 0;

  using Item = std::pair<Cost, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.emplace(0, source);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > sp.dist[u]) continue;
    for (auto [v, w] : g.neighbors(u)) {
      Cost nd = d + w;
      if (nd < sp.dist[v]) {
        sp.dist[v] = nd;
        sp.pred[v] = u;
        pq.emplace(nd, v);
      } else if (nd == sp.dist[v] && u < sp.pred[v]) {
        // Equal-cost path through a smaller predecessor id: keep paths
        // deterministic without changing distances.
        sp.pred[v] = u;
      }
    }
  }
  return sp;
}

std::vector<std::vector<Cost>> all_pairs_shortest_paths(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<Cost>> dist;
  dist.reserve(n);
  for (int s = 0; s < n; ++s) {
    ShortestPaths sp = shortest_paths(g, s);
    for (Cost d : sp.dist)
      if (d >= kUnreachable)
        throw Error("graph is disconnected: no path from node " +
                    std::to_string(s));
    dist.push_back(std::move(sp.dist));
  }
  return dist;
}

SteinerTree minimum_spanning_tree(const Graph& g) {
  std::vector<Edge> order = g.edges();
  std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
  });
  DisjointSet ds(g.node_count());
  SteinerTree t;
  for (const Edge& e : order) {
    if (ds.unite(e.u, e.v)) {
      t.edges.push_back(e);
      t.cost += e.w;
    }
  }
  if (static_cast<int>(t.edges.size()) != g.node_count() - 1)
    throw Error("cannot build spanning tree: graph is disconnected");
  std::sort(t.edges.begin(), t.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return t;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.empty()) throw Error("induced subgraph needs a non-empty node set");
  for (int v : nodes) g.check_node(v);

  std::vector<int> to_new(g.node_count(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) to_new[nodes[i]] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (to_new[e.u] >= 0 && to_new[e.v] >= 0)
      edges.push_back({to_new[e.u], to_new[e.v], e.w});

  return {Graph(static_cast<int>(nodes.size()), std::move(edges),
                g.weight_denominator()),
          std::move(nodes)};
}

bool is_connected(const Graph& g) {
  const int n = g.node_count();
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, w] : g.neighbors(u)) {
      (void)w;
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  return count == n;
}

bool is_connected(const Graph& g, const std::vector<int>& nodes) {
  if (nodes.empty()) throw Error("connectivity query needs a non-empty node set");
  std::vector<char> in_set(g.node_count(), 0);
  int want = 0;
  for (int v : nodes) {
    g.check_node(v);
    if (!in_set[v]) {
      in_set[v] = 1;
      ++want;
    }
  }
  std::vector<char> seen(g.node_count(), 0);
  std::queue<int> q;
  q.push(nodes[0]);
  seen[nodes[0]] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, w] : g.neighbors(u)) {
      (void)w;
      if (in_set[v] && !seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  return count == want;
}

SteinerTree prune_nonterminal_leaves(const Graph& g, const SteinerTree& tree,
                                     const std::vector<int>& terminals) {
  std::vector<int> nodes = tree.nodes();
  if (tree.edges.size() + 1 != nodes.size() && !tree.edges.empty())
    throw Error("prune input is not a tree: edge/node count mismatch");
  DisjointSet ds(g.node_count());
  for (const Edge& e : tree.edges)
    if (!ds.unite(e.u, e.v)) throw Error("prune input is not a tree: cycle");
  std::vector<char> is_term(g.node_count(), 0);
  for (int t : terminals) {
    g.check_node(t);
    is_term[t] = 1;
    if (!std::binary_search(nodes.begin(), nodes.end(), t))
      throw Error("prune input tree does not contain terminal " +
                  std::to_string(t));
  }

  // Adjacency restricted to the tree's edges; prune leaves iteratively.
  std::vector<std::vector<int>> adj(g.node_count());
  std::vector<int> deg(g.node_count(), 0);
  for (const Edge& e : tree.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<char> removed(g.node_count(), 0);
  std::queue<int> q;
  for (int v : nodes)
    if (deg[v] == 1 && !is_term[v]) q.push(v);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (removed[v] || deg[v] != 1) continue;
    removed[v] = 1;
    for (int u : adj[v]) {
      if (removed[u]) continue;
      if (--deg[u] == 1 && !is_term[u]) q.push(u);
    }
    deg[v] = 0;
  }

  std::vector<std::pair<int, int>> kept;
  for (const Edge& e : tree.edges)
    if (!removed[e.u] && !removed[e.v]) kept.emplace_back(e.u, e.v);
  return make_tree(g, kept);
}

GraphStats graph_stats(const Graph& g) {
  const int n = g.node_count();
  if (n < 2) throw Error("graph stats need at least two nodes");
  GraphStats s;
  s.density = 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1));

  // Hop eccentricity by BFS from every node; radius is the minimum.
  int radius = std::numeric_limits<int>::max();
  std::vector<int> hop(n);
  for (int src = 0; src < n; ++src) {
    std::fill(hop.begin(), hop.end(), -1);
    std::queue<int> q;
    q.push(src);
    hop[src] = 0;
    int ecc = 0;
    int count = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, w] : g.neighbors(u)) {
        (void)w;
        if (hop[v] < 0) {
          hop[v] = hop[u] + 1;
          ecc = std::max(ecc, hop[v]);
          ++count;
          q.push(v);
        }
      }
    }
    if (count != n) throw Error("graph stats require a connected graph");
    radius = std::min(radius, ecc);
  }
  s.radius = radius;
  return s;
}

}  // namespace steiner
