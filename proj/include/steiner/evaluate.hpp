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

#ifndef STEINER_EVALUATE_HPP_
#define STEINER_EVALUATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "steiner/dataset.hpp"
#include "steiner/models.hpp"

namespace steiner {

// Solution methods the harness can score. "h1" and "h2" need a model for
// node scores; "exact" and "2approx" do not.
extern const std::vector<std::string> kEvalMethods;

struct EvalRow {
  std::string id;
  std::string family;  // id prefix (ER/WS/BA/GE) or "SL" for foreign files
  std::string method;
  double cost = 0.0;          // found tree cost (weight units)
  double optimal_cost = 0.0;  // reference optimum
  double ratio = 0.0;         // cost / optimal
  double seconds = 0.0;
};

struct EvalCell {
  std::string method;
  std::string family;
  int count = 0;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
  double total_seconds = 0.0;
};

struct EvalReport {
  std::vector<EvalRow> rows;    // per instance x method
  std::vector<EvalCell> cells;  // per method x family
  int unlabeled_skipped = 0;    // test entries without a reference optimum
};

// Runs each requested method on every labeled test-split entry, verifies
// every produced tree against the instance, and aggregates cost ratios per
// (method, family). Entries without an optimal cost are skipped and
// counted. `model` may be null when no score-based method is requested.
EvalReport evaluate_methods(const Dataset& dataset,
                            const std::vector<std::string>& methods,
                            const ModelParams* model,
                            int exact_terminal_cap = 14);

// JSON object with rows, aggregate cells and the skip counter.
void write_report_json(const EvalReport& report, const std::string& path);
// Two CSV tables side by side: <path> gets the aggregate cells and
// <stem>_rows.csv the per-instance rows.
void write_report_csv(const EvalReport& report, const std::string& path);

// Histogram row: one bin of a per-family metric distribution.
struct HistogramBin {
  std::string family;
  std::string metric;  // "density" or "radius"
  int bin = 0;
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

// Density and hop-radius histograms (20 equal-width bins over the observed
// range) per family, over every instance of the dataset.
std::vector<HistogramBin> distribution_stats(const Dataset& dataset);

std::string histogram_csv(const std::vector<HistogramBin>& bins);

}  // namespace steiner

#endif  // STEINER_EVALUATE_HPP_
