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

#include "steiner/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "steiner/rng.hpp"

namespace steiner {

std::string family_name(Family f) {
  switch (f) {
    case Family::ER: return "ER";
    case Family::WS: return "WS";
    case Family::BA: return "BA";
    case Family::GE: return "GE";
  }
  throw Error("unknown family");
}

Family family_from_name(const std::string& name) {
  std::string up = name;
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "ER") return Family::ER;
  if (up == "WS") return Family::WS;
  if (up == "BA") return Family::BA;
  if (up == "GE") return Family::GE;
  throw Error("unknown graph family '" + name + "' (expected ER, WS, BA or GE)");
}

double effective_er_probability(double requested, int n) {
  double threshold = 2.0 * std::log(static_cast<double>(n)) / n;
  return std::max(requested, threshold);
}

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

void add_edge(EdgeSet& es, int u, int v) {
  if (u > v) std::swap(u, v);
  es.emplace(u, v);
}

bool has_edge(const EdgeSet& es, int u, int v) {
  if (u > v) std::swap(u, v);
  return es.count({u, v}) > 0;
}

EdgeSet sample_er(const GeneratorConfig& c, Rng& rng) {
  double p = effective_er_probability(c.er_p, c.n);
  EdgeSet es;
  for (int u = 0; u < c.n; ++u)
    for (int v = u + 1; v < c.n; ++v)
      if (rng.real() < p) es.emplace(u, v);
  return es;
}

EdgeSet sample_ws(const GeneratorConfig& c, Rng& rng) {
  const int n = c.n, k = c.ws_k;
  EdgeSet es;
  for (int j = 1; j <= k / 2; ++j)
    for (int i = 0; i < n; ++i) add_edge(es, i, (i + j) % n);

  // Degree bookkeeping so a saturated node skips rewiring instead of
  // looping forever on the resample-on-collision rule.
  std::vector<int> deg(n, 0);
  for (const auto& [u, v] : es) {
    ++deg[u];
    ++deg[v];
  }

  for (int j = 1; j <= k / 2; ++j) {
    for (int i = 0; i < n; ++i) {
      if (rng.real() >= c.ws_p) continue;
      if (deg[i] >= n - 1) continue;
      int t = (i + j) % n;
      int w;
      do {
        w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      } while (w == i || has_edge(es, i, w));
      if (has_edge(es, i, t)) {
        es.erase({std::min(i, t), std::max(i, t)});
        --deg[i];
        --deg[t];
      }
      add_edge(es, i, w);
      ++deg[i];
      ++deg[w];
    }
  }
  return es;
}

EdgeSet sample_ba(const GeneratorConfig& c, Rng& rng) {
  const int n = c.n, m = c.ba_m;
  EdgeSet es;
  std::vector<int> targets(m);
  for (int i = 0; i < m; ++i) targets[i] = i;
  // Nodes repeated once per incident edge; sampling from this list is
  // preferential attachment.
  std::vector<int> repeated;
  for (int source = m; source < n; ++source) {
    for (int t : targets) add_edge(es, source, t);
    for (int t : targets) repeated.push_back(t);
    repeated.insert(repeated.end(), m, source);
    if (source + 1 >= n) break;
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < m)
      chosen.insert(repeated[rng.below(repeated.size())]);
    targets.assign(chosen.begin(), chosen.end());
  }
  return es;
}

EdgeSet sample_ge(const GeneratorConfig& c, Rng& rng) {
  const int n = c.n;
  std::vector<std::pair<double, double>> pts(n);
  for (auto& [x, y] : pts) {
    x = rng.real();
    y = rng.real();
  }
  double r = std::sqrt((1.0 + c.ge_eps) * std::log(static_cast<double>(n)) /
                       (std::numbers::pi * n));
  double r2 = r * r;
  EdgeSet es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double dx = pts[u].first - pts[v].first;
      double dy = pts[u].second - pts[v].second;
      if (dx * dx + dy * dy <= r2) es.emplace(u, v);
    }
  return es;
}

void validate(const GeneratorConfig& c) {
  if (c.n < 4) throw Error("generator needs n >= 4");
  switch (c.family) {
    case Family::ER:
      if (c.er_p > 1.0) throw Error("ER probability must be <= 1");
      break;
    case Family::WS:
      if (c.ws_k < 2 || c.ws_k % 2 != 0 || c.ws_k >= c.n)
        throw Error("WS lattice degree must be even and in [2, n)");
      if (c.ws_p < 0.0 || c.ws_p > 1.0)
        throw Error("WS rewiring probability must be in [0, 1]");
      break;
    case Family::BA:
      if (c.ba_m < 1 || c.ba_m >= c.n)
        throw Error("BA attachment count must be in [1, n)");
      break;
    case Family::GE:
      if (c.ge_eps <= 0.0) throw Error("GE radius slack must be positive");
      break;
  }
  if (c.terminal_fraction <= 0.0 || c.terminal_fraction >= 1.0)
    throw Error("terminal fraction must be in (0, 1)");
}

std::string make_id(const GeneratorConfig& c) {
  int pct = static_cast<int>(std::llround(c.terminal_fraction * 100.0));
  return family_name(c.family) + "-n" + std::to_string(c.n) +
         (c.weighted ? "-w" : "-u") + "-f" + std::to_string(pct) + "-s" +
         std::to_string(c.seed);
}

}  // namespace

StpInstance generate_instance(const GeneratorConfig& config) {
  validate(config);
  const int n = config.n;

  for (int attempt = 0; attempt < 100; ++attempt) {
    Rng rng(config.seed + 1000ull * attempt);

    EdgeSet es;
    switch (config.family) {
      case Family::ER: es = sample_er(config, rng); break;
      case Family::WS: es = sample_ws(config, rng); break;
      case Family::BA: es = sample_ba(config, rng); break;
      case Family::GE: es = sample_ge(config, rng); break;
    }

    // Weights are drawn in canonical (u, v) edge order, which the ordered
    // set already provides, so the draw sequence is reproducible.
    std::vector<Edge> edges;
    edges.reserve(es.size());
    for (const auto& [u, v] : es) {
      Cost w = config.weighted ? Cost(1 + rng.below(10)) : Cost(1);
      edges.push_back({u, v, w});
    }
    Graph graph(n, std::move(edges));
    if (!is_connected(graph)) continue;

    int want = static_cast<int>(std::llround(config.terminal_fraction * n));
    want = std::clamp(want, 2, n - 1);
    std::vector<int> terminals = rng.sample_without_replacement(n, want);
    return StpInstance(std::move(graph), std::move(terminals), make_id(config),
                       config.seed);
  }
  throw Error("could not sample a connected " + family_name(config.family) +
              " graph in 100 attempts (n=" + std::to_string(n) +
              ", seed=" + std::to_string(config.seed) + ")");
}

}  // namespace steiner
