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

#include "steiner/heuristics.hpp"

#include <algorithm>
#include <cmath>

#include "steiner/approx.hpp"

namespace steiner {
namespace {

void check_scores(const StpInstance& instance,
                  const std::vector<double>& scores) {
  if (static_cast<int>(scores.size()) != instance.graph().node_count())
    throw Error("score count does not match node count");
  for (double s : scores)
    if (!std::isfinite(s)) throw Error("scores contain non-finite values");
}

// Non-terminal ids ordered by descending score, ties toward smaller id.
std::vector<int> candidates_by_score(const StpInstance& instance,
                                     const std::vector<double>& scores) {
  std::vector<int> out;
  for (int v = 0; v < instance.graph().node_count(); ++v)
    if (!instance.is_terminal(v)) out.push_back(v);
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
    return scores[a] > scores[b];
  });
  return out;
}

}  // namespace

SteinerTree h1_induced_mst(const StpInstance& instance,
                           const std::vector<double>& scores) {
  check_scores(instance, scores);
  const Graph& g = instance.graph();

  std::vector<int> working = instance.terminals();
  std::vector<int> rest;
  for (int v : candidates_by_score(instance, scores)) {
    if (scores[v] >= kPredictedThreshold)
      working.push_back(v);
    else
      rest.push_back(v);
  }

  // Grow the working set by score until its induced subgraph connects.
  std::size_t next = 0;
  while (!is_connected(g, working)) {
    if (next >= rest.size())
      throw Error("internal error: exhausted nodes before connectivity");
    working.push_back(rest[next++]);
  }

  InducedSubgraph sub = induced_subgraph(g, working);
  SteinerTree mst = minimum_spanning_tree(sub.graph);
  std::vector<int> local_terms;
  for (std::size_t i = 0; i < sub.to_original.size(); ++i)
    if (instance.is_terminal(sub.to_original[i]))
      local_terms.push_back(static_cast<int>(i));
  SteinerTree pruned = prune_nonterminal_leaves(sub.graph, mst, local_terms);

  std::vector<std::pair<int, int>> mapped;
  for (const Edge& e : pruned.edges)
    mapped.emplace_back(sub.to_original[e.u], sub.to_original[e.v]);
  return make_tree(g, mapped);
}

SteinerTree h2_terminal_promotion(const StpInstance& instance,
                                  const std::vector<double>& scores) {
  check_scores(instance, scores);
  const Graph& g = instance.graph();
  const std::vector<int>& terminals = instance.terminals();

  std::vector<int> working = terminals;
  SteinerTree best;
  bool have_best = false;
  auto record = [&]() {
    StpInstance promoted(g, working, instance.id());
    SteinerTree candidate = prune_nonterminal_leaves(
        g, two_approx(promoted), terminals);
    if (!have_best || candidate.cost < best.cost) {
      best = std::move(candidate);
      have_best = true;
    }
  };

  record();  // baseline: plain 2-approximation

  std::vector<int> ranked = candidates_by_score(instance, scores);
  std::size_t next = 0;
  // Phase 1: promote every predicted node, best first.
  while (next < ranked.size() && scores[ranked[next]] >= kPredictedThreshold) {
    working.push_back(ranked[next++]);
    record();
  }
  // Phase 2: if the working set still induces a disconnected subgraph,
  // keep promoting by score until it connects.
  while (!is_connected(g, working)) {
    if (next >= ranked.size())
      throw Error("internal error: exhausted nodes before connectivity");
    working.push_back(ranked[next++]);
    record();
  }
  return best;
}

}  // namespace steiner
