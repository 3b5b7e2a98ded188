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

#include "steiner/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>

#include "steiner/exact.hpp"
#include "steiner/rng.hpp"
#include "steiner/steinlib.hpp"

namespace steiner {

int Dataset::train_count() const {
  int c = 0;
  for (const DatasetEntry& e : entries) c += e.train_split ? 1 : 0;
  return c;
}

int Dataset::labeled_count() const {
  int c = 0;
  for (const DatasetEntry& e : entries) c += e.labels ? 1 : 0;
  return c;
}

std::vector<GeneratorConfig> expand_spec(const DatasetSpec& spec) {
  if (spec.seeds_per_cell < 1) throw Error("seeds_per_cell must be positive");
  if (spec.families.empty() || spec.node_counts.empty() ||
      spec.terminal_fractions.empty())
    throw Error("dataset spec must list families, node counts and fractions");
  std::vector<GeneratorConfig> out;
  std::uint64_t next_seed = spec.base_seed;
  for (Family fam : spec.families)
    for (int n : spec.node_counts)
      for (double frac : spec.terminal_fractions)
        for (int s = 0; s < spec.seeds_per_cell; ++s) {
          GeneratorConfig c;
          c.family = fam;
          c.n = n;
          c.er_p = spec.er_p;
          c.ws_k = spec.ws_k;
          c.ws_p = spec.ws_p;
          c.ba_m = spec.ba_m;
          c.ge_eps = spec.ge_eps;
          c.weighted = spec.weighted;
          c.terminal_fraction = frac;
          c.seed = next_seed++;
          out.push_back(c);
        }
  return out;
}

Dataset generate_dataset(const DatasetSpec& spec) {
  Dataset ds;
  for (const GeneratorConfig& c : expand_spec(spec))
    ds.entries.emplace_back(generate_instance(c));

  // Seeded-shuffle 80/20 split; train takes floor(0.8 * N).
  const int n = static_cast<int>(ds.entries.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(spec.base_seed + 0xD1B54A32D192ED03ull);
  rng.shuffle(order);
  const int train_n = static_cast<int>(0.8 * n);
  for (int i = 0; i < n; ++i) ds.entries[order[i]].train_split = i < train_n;
  return ds;
}

LabelStats label_dataset(Dataset& dataset, int terminal_cap) {
  LabelStats stats;
  std::vector<DatasetEntry> kept;
  kept.reserve(dataset.entries.size());
  for (DatasetEntry& e : dataset.entries) {
    if (e.labels) {
      kept.push_back(std::move(e));
      continue;
    }
    const int k = static_cast<int>(e.instance.terminals().size());
    if (k > terminal_cap) {
      ++stats.skipped_over_cap;
      stats.log.push_back("skipped '" + e.instance.id() + "': " +
                          std::to_string(k) + " terminals exceed the cap of " +
                          std::to_string(terminal_cap));
      kept.push_back(std::move(e));
      continue;
    }
    try {
      ExactResult res = dreyfus_wagner(e.instance, terminal_cap);
      std::vector<int> labels(e.instance.graph().node_count(), 0);
      for (int v : res.tree.nodes()) labels[v] = 1;
      e.labels = std::move(labels);
      e.optimal_cost = res.optimal_cost;
      ++stats.labeled;
      kept.push_back(std::move(e));
    } catch (const Error& err) {
      ++stats.dropped;
      stats.log.push_back("dropped '" + e.instance.id() +
                          "': exact solver failed: " + err.what());
    }
  }
  dataset.entries = std::move(kept);
  return stats;
}

void save_dataset(const Dataset& dataset, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  std::set<std::string> ids;
  for (const DatasetEntry& e : dataset.entries)
    if (!ids.insert(e.instance.id()).second)
      throw Error("duplicate instance id '" + e.instance.id() + "'");

  std::ofstream side(fs::path(dir) / "dataset.jsonl", std::ios::binary);
  if (!side) throw Error("cannot write dataset sidecar in " + dir);
  for (const DatasetEntry& e : dataset.entries) {
    save_stp_file(e.instance, (fs::path(dir) / (e.instance.id() + ".stp")).string());

    nlohmann::json j;
    j["id"] = e.instance.id();
    if (e.instance.seed())
      j["seed"] = *e.instance.seed();
    else
      j["seed"] = nullptr;
    j["terminals"] = e.instance.terminals();
    if (e.labels)
      j["labels"] = *e.labels;
    else
      j["labels"] = nullptr;
    if (e.optimal_cost) {
      // Exact numerator plus the human-readable value.
      j["optimal_cost_scaled"] = *e.optimal_cost;
      j["optimal_cost"] = static_cast<double>(*e.optimal_cost) /
                          static_cast<double>(e.instance.graph().weight_denominator());
    } else {
      j["optimal_cost_scaled"] = nullptr;
      j["optimal_cost"] = nullptr;
    }
    j["split"] = e.train_split ? "train" : "test";
    side << j.dump() << "\n";
  }
  if (!side) throw Error("failed writing dataset sidecar in " + dir);
}

Dataset load_dataset(const std::string& dir) {
  namespace fs = std::filesystem;
  std::ifstream side(fs::path(dir) / "dataset.jsonl", std::ios::binary);
  if (!side) throw Error("cannot open dataset sidecar in " + dir);

  Dataset ds;
  std::string line;
  int line_no = 0;
  while (std::getline(side, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      std::string id = j.at("id").get<std::string>();
      StpInstance inst = load_stp_file((fs::path(dir) / (id + ".stp")).string());
      if (inst.id() != id)
        throw Error("instance file name does not match its embedded id");
      if (j.at("terminals").get<std::vector<int>>() != inst.terminals())
        throw Error("sidecar terminals disagree with the instance file");

      DatasetEntry entry(std::move(inst));
      if (!j.at("labels").is_null()) {
        auto labels = j.at("labels").get<std::vector<int>>();
        if (static_cast<int>(labels.size()) !=
            entry.instance.graph().node_count())
          throw Error("label count does not match node count");
        for (int l : labels)
          if (l != 0 && l != 1) throw Error("labels must be 0 or 1");
        entry.labels = std::move(labels);
      }
      if (!j.at("optimal_cost_scaled").is_null())
        entry.optimal_cost = j.at("optimal_cost_scaled").get<Cost>();
      std::string split = j.at("split").get<std::string>();
      if (split != "train" && split != "test")
        throw Error("split must be 'train' or 'test'");
      entry.train_split = split == "train";
      ds.entries.push_back(std::move(entry));
    } catch (const nlohmann::json::exception& e) {
      throw Error("dataset.jsonl line " + std::to_string(line_no) + ": " +
                  e.what());
    } catch (const Error& e) {
      throw Error("dataset.jsonl line " + std::to_string(line_no) + ": " +
                  e.what());
    }
  }
  return ds;
}

}  // namespace steiner
