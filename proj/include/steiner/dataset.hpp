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

#ifndef STEINER_DATASET_HPP_
#define STEINER_DATASET_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/generate.hpp"
#include "steiner/graph.hpp"

namespace steiner {

struct DatasetEntry {
  StpInstance instance;
  // 0/1 per node: 1 when the node lies on an optimal tree. Absent until the
  // entry has been labeled (terminal count within the exact-solver cap).
  std::optional<std::vector<int>> labels;
  std::optional<Cost> optimal_cost;  // weight-numerator units
  bool train_split = true;

  explicit DatasetEntry(StpInstance inst) : instance(std::move(inst)) {}
};

struct Dataset {
  std::vector<DatasetEntry> entries;

  int train_count() const;
  int labeled_count() const;
};

// Corpus description: the cartesian product of families, node counts and
// terminal fractions, with `seeds_per_cell` instances per combination.
// Instance seeds are base_seed, base_seed+1, ... in expansion order, so a
// spec pins the corpus exactly.
struct DatasetSpec {
  std::vector<Family> families = {Family::ER, Family::WS, Family::BA,
                                  Family::GE};
  std::vector<int> node_counts = {20};
  std::vector<double> terminal_fractions = {0.2};
  int seeds_per_cell = 1;
  bool weighted = false;
  std::uint64_t base_seed = 0;

  // Family knobs forwarded to every GeneratorConfig.
  double er_p = -1.0;
  int ws_k = 6;
  double ws_p = 0.2;
  int ba_m = 5;
  double ge_eps = 0.5;
};

std::vector<GeneratorConfig> expand_spec(const DatasetSpec& spec);

// Generates every instance of the spec and assigns the 80/20 train/test
// split by a seeded shuffle (train gets floor(0.8 * N)). Labels are not
// computed here; see label_dataset.
Dataset generate_dataset(const DatasetSpec& spec);

struct LabelStats {
  int labeled = 0;
  int skipped_over_cap = 0;  // kept, but left unlabeled
  int dropped = 0;           // removed: exact solver failed unexpectedly
  std::vector<std::string> log;
};

// Runs the exact solver on every unlabeled entry whose terminal count is
// within `terminal_cap` and stores node labels plus the optimal cost.
// Entries over the cap stay unlabeled (and are reported); entries where the
// solver fails are dropped and reported, never silently mislabeled.
LabelStats label_dataset(Dataset& dataset, int terminal_cap = 14);

// Directory layout: one "<id>.stp" per instance plus "dataset.jsonl" with
// one JSON object per entry (id, seed, terminals, labels, optimal cost,
// split) in entry order. Saving twice produces identical bytes.
void save_dataset(const Dataset& dataset, const std::string& dir);
Dataset load_dataset(const std::string& dir);

}  // namespace steiner

#endif  // STEINER_DATASET_HPP_
