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

#include "steiner/exact.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <set>
#include <vector>

namespace steiner {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Backtracking record for one dp[mask][v] entry.
struct Decision {
  enum Kind : std::uint8_t { kNone, kBase, kMerge, kExtend };
  Kind kind = kNone;
  int arg = 0;  // submask for kMerge, predecessor node for kExtend
};

}  // namespace

ExactResult dreyfus_wagner(const StpInstance& instance, int terminal_cap) {
  auto start = Clock::now();
  const Graph& g = instance.graph();
  const std::vector<int>& terms = instance.terminals();
  const int n = g.node_count();
  const int k = static_cast<int>(terms.size());
  if (terminal_cap < 2) throw Error("terminal cap must be at least 2");
  if (k > terminal_cap)
    throw Error("instance has " + std::to_string(k) + " terminals, above the exact-solver cap of " +
                std::to_string(terminal_cap) + "; use the approximation instead");

  const std::uint32_t full = (1u << k) - 1;
  std::vector<std::vector<Cost>> dp(full + 1, std::vector<Cost>(n, kUnreachable));
  std::vector<std::vector<Decision>> dec(full + 1, std::vector<Decision>(n));
  for (int i = 0; i < k; ++i) {
    dp[1u << i][terms[i]] = 0;
    dec[1u << i][terms[i]] = {Decision::kBase, 0};
  }

  using Item = std::pair<Cost, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  std::uint64_t masks_done = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    auto& row = dp[mask];
    auto& drow = dec[mask];
    // Merge two disjoint terminal subsets that meet at v. Each unordered
    // submask pair is visited once (sub > mask ^ sub).
    for (std::uint32_t sub = (mask - 1) & mask; sub > (mask ^ sub);
         sub = (sub - 1) & mask) {
      const auto& a = dp[sub];
      const auto& b = dp[mask ^ sub];
      for (int v = 0; v < n; ++v) {
        if (a[v] >= kUnreachable || b[v] >= kUnreachable) continue;
        Cost cand = a[v] + b[v];
        if (cand < row[v]) {
          row[v] = cand;
          drow[v] = {Decision::kMerge, static_cast<int>(sub)};
        }
      }
    }
    // Extend trees along shortest paths: Dijkstra seeded with every
    // currently reachable node.
    for (int v = 0; v < n; ++v)
      if (row[v] < kUnreachable) pq.emplace(row[v], v);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > row[u]) continue;
      for (auto [v, w] : g.neighbors(u)) {
        Cost nd = d + w;
        if (nd < row[v]) {
          row[v] = nd;
          drow[v] = {Decision::kExtend, u};
          pq.emplace(nd, v);
        }
      }
    }
    ++masks_done;
  }

  const int root = terms[0];
  Cost best = dp[full][root];
  if (best >= kUnreachable) throw Error("no Steiner tree exists (disconnected terminals)");

  // Reconstruct the edge set by replaying decisions.
  std::set<std::pair<int, int>> tree_edges;
  std::vector<std::pair<std::uint32_t, int>> stack{{full, root}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    const Decision& d = dec[mask][v];
    switch (d.kind) {
      case Decision::kBase:
        break;
      case Decision::kMerge: {
        std::uint32_t sub = static_cast<std::uint32_t>(d.arg);
        stack.emplace_back(sub, v);
        stack.emplace_back(mask ^ sub, v);
        break;
      }
      case Decision::kExtend: {
        int u = d.arg;
        tree_edges.emplace(std::min(u, v), std::max(u, v));
        stack.emplace_back(mask, u);
        break;
      }
      case Decision::kNone:
        throw Error("internal error: dp reconstruction hit an unset entry");
    }
  }

  ExactResult res;
  res.tree = make_tree(g, {tree_edges.begin(), tree_edges.end()});
  res.optimal_cost = best;
  res.subsets_explored = masks_done;
  res.seconds = seconds_since(start);
  if (res.tree.cost != best)
    throw Error("internal error: reconstructed tree cost mismatch");
  VerifyResult check = verify_steiner_tree(instance, res.tree);
  if (!check.valid)
    throw Error("internal error: reconstructed tree invalid: " + check.reason);
  return res;
}

ExactResult brute_force_steiner(const StpInstance& instance) {
  auto start = Clock::now();
  const Graph& g = instance.graph();
  const int n = g.node_count();
  if (n > 12) throw Error("brute-force solver is limited to 12 nodes");

  std::vector<int> extras;
  for (int v = 0; v < n; ++v)
    if (!instance.is_terminal(v)) extras.push_back(v);
  const int q = static_cast<int>(extras.size());

  ExactResult res;
  res.optimal_cost = kUnreachable;
  for (std::uint32_t sub = 0; sub < (1u << q); ++sub) {
    ++res.subsets_explored;
    std::vector<int> nodes = instance.terminals();
    for (int i = 0; i < q; ++i)
      if (sub & (1u << i)) nodes.push_back(extras[i]);
    if (!is_connected(g, nodes)) continue;

    InducedSubgraph sg = induced_subgraph(g, nodes);
    SteinerTree mst = minimum_spanning_tree(sg.graph);
    std::vector<int> local_terms;
    for (std::size_t i = 0; i < sg.to_original.size(); ++i)
      if (instance.is_terminal(sg.to_original[i]))
        local_terms.push_back(static_cast<int>(i));
    SteinerTree pruned = prune_nonterminal_leaves(sg.graph, mst, local_terms);
    if (pruned.cost < res.optimal_cost) {
      res.optimal_cost = pruned.cost;
      std::vector<std::pair<int, int>> mapped;
      for (const Edge& e : pruned.edges)
        mapped.emplace_back(sg.to_original[e.u], sg.to_original[e.v]);
      res.tree = make_tree(g, mapped);
    }
  }
  if (res.optimal_cost >= kUnreachable)
    throw Error("no Steiner tree exists (disconnected terminals)");
  res.seconds = seconds_since(start);
  return res;
}

VerifyResult verify_steiner_tree(const StpInstance& instance,
                                 const SteinerTree& tree) {
  const Graph& g = instance.graph();
  VerifyResult out;
  if (tree.edges.empty()) {
    out.reason = "tree has no edges";
    return out;
  }
  std::set<std::pair<int, int>> seen;
  Cost cost = 0;
  for (const Edge& e : tree.edges) {
    int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
    if (u < 0 || v >= g.node_count() || u == v) {
      out.reason = "edge endpoints out of range";
      return out;
    }
    if (!g.has_edge(u, v)) {
      out.reason = "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                   ") is not in the graph";
      return out;
    }
    if (!seen.emplace(u, v).second) {
      out.reason = "duplicate edge in tree";
      return out;
    }
    cost += g.edge_weight(u, v);
  }

  // Union-find cycle check plus node count gives tree-ness.
  std::vector<int> parent(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : tree.edges) {
    int ru = find(e.u), rv = find(e.v);
    if (ru == rv) {
      out.reason = "tree contains a cycle";
      return out;
    }
    parent[ru] = rv;
  }
  std::vector<int> nodes = tree.nodes();
  if (nodes.size() != tree.edges.size() + 1) {
    out.reason = "tree is not connected";
    return out;
  }
  for (int t : instance.terminals()) {
    if (!std::binary_search(nodes.begin(), nodes.end(), t)) {
      out.reason = "terminal " + std::to_string(t) + " is not spanned";
      return out;
    }
  }
  out.valid = true;
  out.cost = cost;
  return out;
}

}  // namespace steiner
