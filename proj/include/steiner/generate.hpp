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

#ifndef STEINER_GENERATE_HPP_
#define STEINER_GENERATE_HPP_

#include <cstdint>
#include <string>

#include "steiner/graph.hpp"

namespace steiner {

// Random graph families used to build instance corpora.
enum class Family { ER, WS, BA, GE };

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws Error on unknown

struct GeneratorConfig {
  Family family = Family::ER;
  int n = 20;

  // ER: requested edge probability; the effective value is raised to
  // 2*ln(n)/n when smaller (or when negative, meaning "auto") so sampled
  // graphs are almost surely connected.
  double er_p = -1.0;
  // WS ring lattice degree (even) and rewiring probability.
  int ws_k = 6;
  double ws_p = 0.2;
  // BA attachment count: each new node links to ba_m existing nodes.
  int ba_m = 5;
  // GE connection radius slack: r = sqrt((1+ge_eps)*ln(n) / (pi*n)).
  double ge_eps = 0.5;

  // Uniform integer weights in {1,...,10} when true, all-1 otherwise.
  bool weighted = false;
  // Terminal count = round(terminal_fraction*n), clamped to [2, n-1].
  double terminal_fraction = 0.2;

  std::uint64_t seed = 0;
};

// Draws one connected instance. Disconnected samples are resampled with
// sub-seed seed + 1000*attempt for up to 100 attempts, after which an Error
// names the family and seed. The instance id encodes family, size,
// weighting, terminal fraction and seed (e.g. "ER-n20-w-f20-s7").
StpInstance generate_instance(const GeneratorConfig& config);

// Effective ER probability for a given request (see er_p above).
double effective_er_probability(double requested, int n);

}  // namespace steiner

#endif  // STEINER_GENERATE_HPP_
