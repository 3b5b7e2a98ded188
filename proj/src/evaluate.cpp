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

#include "steiner/evaluate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "steiner/approx.hpp"
#include "steiner/exact.hpp"
#include "steiner/heuristics.hpp"

namespace steiner {

const std::vector<std::string> kEvalMethods = {"exact", "2approx", "h1", "h2"};

namespace {

std::string family_of(const std::string& id) {
  std::size_t dash = id.find('-');
  std::string prefix = dash == std::string::npos ? id : id.substr(0, dash);
  for (const char* fam : {"ER", "WS", "BA", "GE"})
    if (prefix == fam) return prefix;
  return "SL";
}

double to_weight_units(Cost c, const Graph& g) {
  return static_cast<double>(c) / static_cast<double>(g.weight_denominator());
}

}  // namespace

EvalReport evaluate_methods(const Dataset& dataset,
                            const std::vector<std::string>& methods,
                            const ModelParams* model, int exact_terminal_cap) {
  for (const std::string& m : methods)
    if (std::find(kEvalMethods.begin(), kEvalMethods.end(), m) ==
        kEvalMethods.end())
      throw Error("unknown method '" + m + "'");
  const bool needs_model =
      std::count(methods.begin(), methods.end(), "h1") > 0 ||
      std::count(methods.begin(), methods.end(), "h2") > 0;
  if (needs_model && model == nullptr)
    throw Error("methods h1/h2 require a trained model");

  EvalReport report;
  std::map<std::pair<std::string, std::string>, EvalCell> cells;

  for (const DatasetEntry& e : dataset.entries) {
    if (e.train_split) continue;
    if (!e.optimal_cost) {
      ++report.unlabeled_skipped;
      continue;
    }
    const Cost opt = *e.optimal_cost;
    const std::string family = family_of(e.instance.id());

    std::vector<double> scores;
    if (needs_model) scores = predict_scores(*model, e.instance);

    for (const std::string& method : methods) {
      auto t0 = std::chrono::steady_clock::now();
      SteinerTree tree;
      if (method == "exact")
        tree = dreyfus_wagner(e.instance, exact_terminal_cap).tree;
      else if (method == "2approx")
        tree = two_approx(e.instance);
      else if (method == "h1")
        tree = h1_induced_mst(e.instance, scores);
      else
        tree = h2_terminal_promotion(e.instance, scores);
      double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();

      VerifyResult check = verify_steiner_tree(e.instance, tree);
      if (!check.valid)
        throw Error("method " + method + " produced an invalid tree on '" +
                    e.instance.id() + "': " + check.reason);

      EvalRow row;
      row.id = e.instance.id();
      row.family = family;
      row.method = method;
      row.cost = to_weight_units(check.cost, e.instance.graph());
      row.optimal_cost = to_weight_units(opt, e.instance.graph());
      row.ratio = static_cast<double>(check.cost) / static_cast<double>(opt);
      row.seconds = seconds;
      report.rows.push_back(row);

      EvalCell& cell = cells[{method, family}];
      cell.method = method;
      cell.family = family;
      ++cell.count;
      cell.mean_ratio += row.ratio;  // sum for now; divided below
      cell.max_ratio = std::max(cell.max_ratio, row.ratio);
      cell.total_seconds += seconds;
    }
  }

  for (auto& [key, cell] : cells) {
    cell.mean_ratio /= cell.count;
    report.cells.push_back(cell);
  }
  return report;
}

void write_report_json(const EvalReport& report, const std::string& path) {
  nlohmann::json j;
  j["unlabeled_skipped"] = report.unlabeled_skipped;
  nlohmann::json rows = nlohmann::json::array();
  for (const EvalRow& r : report.rows)
    rows.push_back({{"id", r.id},
                    {"family", r.family},
                    {"method", r.method},
                    {"cost", r.cost},
                    {"optimal_cost", r.optimal_cost},
                    {"ratio", r.ratio},
                    {"seconds", r.seconds}});
  j["rows"] = std::move(rows);
  nlohmann::json cells = nlohmann::json::array();
  for (const EvalCell& c : report.cells)
    cells.push_back({{"method", c.method},
                     {"family", c.family},
                     {"count", c.count},
                     {"mean_ratio", c.mean_ratio},
                     {"max_ratio", c.max_ratio},
                     {"total_seconds", c.total_seconds}});
  j["aggregates"] = std::move(cells);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw Error("failed writing file: " + path);
}

namespace {

std::string csv_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

void write_report_csv(const EvalReport& report, const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << "method,family,count,mean_ratio,max_ratio,total_seconds\n";
    for (const EvalCell& c : report.cells)
      out << c.method << "," << c.family << "," << c.count << ","
          << csv_double(c.mean_ratio) << "," << csv_double(c.max_ratio) << ","
          << csv_double(c.total_seconds) << "\n";
    if (!out) throw Error("failed writing file: " + path);
  }
  std::string rows_path = path;
  std::size_t dot = rows_path.rfind(".csv");
  if (dot != std::string::npos && dot == rows_path.size() - 4)
    rows_path = rows_path.substr(0, dot);
  rows_path += "_rows.csv";
  std::ofstream out(rows_path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + rows_path);
  out << "id,family,method,cost,optimal_cost,ratio,seconds\n";
  for (const EvalRow& r : report.rows)
    out << r.id << "," << r.family << "," << r.method << ","
        << csv_double(r.cost) << "," << csv_double(r.optimal_cost) << ","
        << csv_double(r.ratio) << "," << csv_double(r.seconds) << "\n";
  if (!out) throw Error("failed writing file: " + rows_path);
}

std::vector<HistogramBin> distribution_stats(const Dataset& dataset) {
  constexpr int kBins = 20;
  // Observed metric values per family.
  std::map<std::string, std::vector<double>> density, radius;
  for (const DatasetEntry& e : dataset.entries) {
    GraphStats st = graph_stats(e.instance.graph());
    const std::string fam = family_of(e.instance.id());
    density[fam].push_back(st.density);
    radius[fam].push_back(static_cast<double>(st.radius));
  }

  std::vector<HistogramBin> out;
  auto emit = [&](const std::string& fam, const std::string& metric,
                  const std::vector<double>& values) {
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    double width = (hi - lo) / kBins;
    std::vector<int> counts(kBins, 0);
    for (double v : values) {
      int b = width > 0.0 ? std::min(kBins - 1, static_cast<int>((v - lo) / width))
                          : 0;
      ++counts[b];
    }
    for (int b = 0; b < kBins; ++b) {
      HistogramBin bin;
      bin.family = fam;
      bin.metric = metric;
      bin.bin = b;
      bin.lo = lo + b * width;
      bin.hi = b == kBins - 1 ? hi : lo + (b + 1) * width;
      bin.count = counts[b];
      out.push_back(bin);
    }
  };
  for (const auto& [fam, values] : density) emit(fam, "density", values);
  for (const auto& [fam, values] : radius) emit(fam, "radius", values);
  return out;
}

std::string histogram_csv(const std::vector<HistogramBin>& bins) {
  std::ostringstream out;
  out << "family,metric,bin,lo,hi,count\n";
  for (const HistogramBin& b : bins)
    out << b.family << "," << b.metric << "," << b.bin << ","
        << csv_double(b.lo) << "," << csv_double(b.hi) << "," << b.count
        << "\n";
  return out.str();
}

}  // namespace steiner
