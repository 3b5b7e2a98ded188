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

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "steiner/dataset.hpp"
#include "steiner/evaluate.hpp"
#include "steiner/exact.hpp"
#include "steiner/models.hpp"
#include "steiner/steinlib.hpp"

using namespace steiner;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE_MESSAGE(bool(f), "missing file " << p.string());
  return std::string((std::istreambuf_iterator<char>(f)), {});
}

DatasetSpec small_spec() {
  DatasetSpec spec;
  spec.families = {Family::ER};
  spec.node_counts = {10};
  spec.terminal_fractions = {0.25, 0.6};
  spec.seeds_per_cell = 10;
  spec.weighted = true;
  spec.base_seed = 100;
  return spec;
}

ModelHyperparams tiny_hyper() {
  ModelHyperparams h;
  h.conv_hidden = 6;
  h.mlp_hidden = 5;
  return h;
}

// Message of the Error an action throws; empty when it does not throw.
std::string thrown_message(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

#define CHECK_ERROR_CONTAINS(expr, substr)                                 \
  do {                                                                     \
    std::string msg_ = thrown_message([&] { (void)(expr); });              \
    CHECK_MESSAGE(msg_.find(substr) != std::string::npos,                  \
                  "expected an error containing '" << (substr)             \
                                                   << "', got: " << msg_); \
  } while (0)

TEST_CASE("spec expansion covers the grid in a fixed seed order") {
  DatasetSpec spec;
  spec.families = {Family::ER, Family::WS};
  spec.node_counts = {8, 10};
  spec.terminal_fractions = {0.25, 0.5};
  spec.seeds_per_cell = 2;
  spec.base_seed = 100;
  spec.ws_k = 4;

  std::vector<GeneratorConfig> configs = expand_spec(spec);
  REQUIRE(configs.size() == 16);
  for (std::size_t i = 0; i < configs.size(); ++i)
    CHECK(configs[i].seed == 100 + i);
  // Nesting: family, then node count, then fraction, then seed index.
  CHECK(configs[0].family == Family::ER);
  CHECK(configs[0].n == 8);
  CHECK(configs[0].terminal_fraction == 0.25);
  CHECK(configs[2].terminal_fraction == 0.5);
  CHECK(configs[4].n == 10);
  CHECK(configs[8].family == Family::WS);
  for (const GeneratorConfig& c : configs) CHECK(c.ws_k == 4);

  spec.seeds_per_cell = 0;
  CHECK_THROWS(expand_spec(spec));
  spec.seeds_per_cell = 2;
  spec.families.clear();
  CHECK_THROWS(expand_spec(spec));
}

TEST_CASE("generation splits 80/20 deterministically") {
  DatasetSpec spec = small_spec();
  Dataset a = generate_dataset(spec);
  Dataset b = generate_dataset(spec);

  REQUIRE(a.entries.size() == 20);
  CHECK(a.train_count() == 16);
  CHECK(a.labeled_count() == 0);

  REQUIRE(b.entries.size() == a.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].instance.id() == b.entries[i].instance.id());
    CHECK(a.entries[i].train_split == b.entries[i].train_split);
    CHECK(serialize_stp(a.entries[i].instance) ==
          serialize_stp(b.entries[i].instance));
  }
  CHECK(a.entries[0].instance.id() == "ER-n10-w-f25-s100");
  CHECK(a.entries[10].instance.id() == "ER-n10-w-f60-s110");
}

TEST_CASE("labeling stores exact optima and respects the terminal cap") {
  Dataset ds = generate_dataset(small_spec());

  // Cap below every terminal count: nothing runs, everything is reported.
  LabelStats none = label_dataset(ds, 1);
  CHECK(none.labeled == 0);
  CHECK(none.skipped_over_cap == 20);
  CHECK(none.dropped == 0);
  REQUIRE(none.log.size() == 20);
  CHECK(none.log[0].find("exceed the cap") != std::string::npos);
  CHECK(ds.labeled_count() == 0);
  CHECK(ds.entries.size() == 20);

  // Cap between the two terminal counts: only the small cells get labels.
  LabelStats partial = label_dataset(ds, 4);
  CHECK(partial.labeled == 10);
  CHECK(partial.skipped_over_cap == 10);
  CHECK(ds.labeled_count() == 10);

  // Full cap: the rest get labeled; already-labeled entries are not redone.
  LabelStats rest = label_dataset(ds, 14);
  CHECK(rest.labeled == 10);
  CHECK(rest.skipped_over_cap == 0);
  CHECK(ds.labeled_count() == 20);

  for (const DatasetEntry& e : ds.entries) {
    REQUIRE(e.labels.has_value());
    REQUIRE(e.optimal_cost.has_value());
    REQUIRE(static_cast<int>(e.labels->size()) ==
            e.instance.graph().node_count());
    for (int t : e.instance.terminals()) CHECK((*e.labels)[t] == 1);
    ExactResult res = dreyfus_wagner(e.instance);
    CHECK(*e.optimal_cost == res.optimal_cost);
    std::vector<int> expect(e.instance.graph().node_count(), 0);
    for (int v : res.tree.nodes()) expect[v] = 1;
    CHECK(*e.labels == expect);
  }
}

TEST_CASE("dataset directories round-trip byte for byte") {
  Dataset ds = generate_dataset(small_spec());
  label_dataset(ds, 4);  // mixed: half labeled, half not

  std::string dir = test::scratch_dir("ds-save");
  save_dataset(ds, dir);
  CHECK(fs::exists(fs::path(dir) / "dataset.jsonl"));
  int stp_files = 0;
  for (const auto& p : fs::directory_iterator(dir))
    if (p.path().extension() == ".stp") ++stp_files;
  CHECK(stp_files == 20);

  Dataset back = load_dataset(dir);
  REQUIRE(back.entries.size() == ds.entries.size());
  for (std::size_t i = 0; i < ds.entries.size(); ++i) {
    const DatasetEntry& want = ds.entries[i];
    const DatasetEntry& got = back.entries[i];
    CHECK(got.instance.id() == want.instance.id());
    CHECK(got.instance.seed() == want.instance.seed());
    CHECK(got.instance.terminals() == want.instance.terminals());
    CHECK(serialize_stp(got.instance) == serialize_stp(want.instance));
    CHECK(got.labels == want.labels);
    CHECK(got.optimal_cost == want.optimal_cost);
    CHECK(got.train_split == want.train_split);
  }

  std::string dir2 = test::scratch_dir("ds-save2");
  save_dataset(back, dir2);
  CHECK(slurp(fs::path(dir) / "dataset.jsonl") ==
        slurp(fs::path(dir2) / "dataset.jsonl"));
  for (const DatasetEntry& e : ds.entries) {
    std::string name = e.instance.id() + ".stp";
    CHECK(slurp(fs::path(dir) / name) == slurp(fs::path(dir2) / name));
  }
}

TEST_CASE("loading rejects corrupted dataset directories") {
  CHECK_ERROR_CONTAINS(load_dataset("/no/such/dir"),
                       "cannot open dataset sidecar");

  DatasetSpec spec = small_spec();
  spec.seeds_per_cell = 2;  // 4 entries is enough here
  Dataset ds = generate_dataset(spec);
  label_dataset(ds);
  std::string dir = test::scratch_dir("ds-corrupt");
  save_dataset(ds, dir);
  const std::string sidecar = (fs::path(dir) / "dataset.jsonl").string();
  const std::string original = slurp(sidecar);

  auto lines = [&]() {
    std::vector<std::string> out;
    std::istringstream in(original);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
  }();
  REQUIRE(lines.size() == 4);

  auto rewrite = [&](int line_idx, const std::string& replacement) {
    std::ofstream out(sidecar, std::ios::binary);
    for (std::size_t i = 0; i < lines.size(); ++i)
      out << (static_cast<int>(i) == line_idx ? replacement : lines[i]) << "\n";
  };

  // Broken JSON on the second line.
  rewrite(1, "{not json");
  CHECK_ERROR_CONTAINS(load_dataset(dir), "line 2");

  // Wrong label length.
  {
    nlohmann::json j = nlohmann::json::parse(lines[2]);
    j["labels"] = {1, 0};
    rewrite(2, j.dump());
    CHECK_ERROR_CONTAINS(load_dataset(dir), "line 3");
  }

  // Terminals that disagree with the instance file.
  {
    nlohmann::json j = nlohmann::json::parse(lines[0]);
    j["terminals"] = {0, 1, 2, 3, 4, 5};
    rewrite(0, j.dump());
    CHECK_ERROR_CONTAINS(load_dataset(dir), "line 1");
  }

  // Unknown split value.
  {
    nlohmann::json j = nlohmann::json::parse(lines[3]);
    j["split"] = "validate";
    rewrite(3, j.dump());
    CHECK_ERROR_CONTAINS(load_dataset(dir), "line 4");
  }

  // Missing instance file.
  rewrite(0, lines[0]);  // restore the sidecar
  fs::remove(fs::path(dir) / (ds.entries[1].instance.id() + ".stp"));
  CHECK_ERROR_CONTAINS(load_dataset(dir), "line 2");
}

TEST_CASE("saving rejects duplicate instance ids") {
  Dataset ds;
  ds.entries.emplace_back(test::make_gstar());
  ds.entries.emplace_back(test::make_gstar());
  CHECK_ERROR_CONTAINS(save_dataset(ds, test::scratch_dir("ds-dup")),
                       "duplicate instance id");
}

TEST_CASE("evaluation scores labeled test entries per method and family") {
  Dataset ds = generate_dataset(small_spec());
  label_dataset(ds);
  int test_entries = 0;
  for (const DatasetEntry& e : ds.entries)
    if (!e.train_split) ++test_entries;
  REQUIRE(test_entries == 4);

  ModelParams model = init_model(ModelVariant::GCN, tiny_hyper(), 3);
  EvalReport report =
      evaluate_methods(ds, {"exact", "2approx", "h1", "h2"}, &model);

  CHECK(report.unlabeled_skipped == 0);
  REQUIRE(report.rows.size() == static_cast<std::size_t>(4 * test_entries));
  for (const EvalRow& r : report.rows) {
    CHECK(r.family == "ER");
    CHECK(r.optimal_cost > 0.0);
    if (r.method == "exact") CHECK(r.ratio == 1.0);
    if (r.method == "2approx") {
      CHECK(r.ratio >= 1.0);
      CHECK(r.ratio <= 2.0);
    }
    CHECK(r.ratio >= 1.0);
    CHECK(r.cost == doctest::Approx(r.ratio * r.optimal_cost));
    CHECK(r.seconds >= 0.0);
  }

  REQUIRE(report.cells.size() == 4);
  for (const EvalCell& c : report.cells) {
    CHECK(c.family == "ER");
    CHECK(c.count == test_entries);
    CHECK(c.max_ratio >= c.mean_ratio);
    if (c.method == "exact") CHECK(c.mean_ratio == 1.0);
  }

  CHECK_ERROR_CONTAINS(evaluate_methods(ds, {"mst"}, nullptr),
                       "unknown method");
  CHECK_ERROR_CONTAINS(evaluate_methods(ds, {"h1"}, nullptr),
                       "require a trained model");
}

TEST_CASE("evaluation counts unlabeled test entries instead of guessing") {
  Dataset ds = generate_dataset(small_spec());
  label_dataset(ds, 4);  // 6-terminal cells stay unlabeled
  int unlabeled_test = 0;
  for (const DatasetEntry& e : ds.entries)
    if (!e.train_split && !e.optimal_cost) ++unlabeled_test;
  REQUIRE(unlabeled_test > 0);

  EvalReport report = evaluate_methods(ds, {"2approx"}, nullptr);
  CHECK(report.unlabeled_skipped == unlabeled_test);
  CHECK(report.rows.size() ==
        static_cast<std::size_t>(4 - unlabeled_test));
}

TEST_CASE("evaluation reports serialize to JSON and CSV") {
  Dataset ds = generate_dataset(small_spec());
  label_dataset(ds);
  EvalReport report = evaluate_methods(ds, {"exact", "2approx"}, nullptr);

  std::string dir = test::scratch_dir("report");
  std::string json_path = dir + "/report.json";
  std::string csv_path = dir + "/report.csv";
  write_report_json(report, json_path);
  write_report_csv(report, csv_path);

  nlohmann::json j = nlohmann::json::parse(slurp(json_path));
  CHECK(j.at("unlabeled_skipped") == 0);
  REQUIRE(j.at("rows").size() == report.rows.size());
  CHECK(j.at("rows")[0].at("method").is_string());
  REQUIRE(j.at("aggregates").size() == report.cells.size());

  std::string cells_csv = slurp(csv_path);
  CHECK(cells_csv.rfind("method,family,count,mean_ratio,max_ratio,total_seconds\n",
                        0) == 0);
  CHECK(std::count(cells_csv.begin(), cells_csv.end(), '\n') ==
        static_cast<long>(1 + report.cells.size()));

  std::string rows_csv = slurp(dir + "/report_rows.csv");
  CHECK(rows_csv.rfind("id,family,method,cost,optimal_cost,ratio,seconds\n",
                       0) == 0);
  CHECK(std::count(rows_csv.begin(), rows_csv.end(), '\n') ==
        static_cast<long>(1 + report.rows.size()));
}

TEST_CASE("distribution histograms bin density and radius per family") {
  DatasetSpec spec = small_spec();
  spec.families = {Family::ER, Family::GE};
  spec.terminal_fractions = {0.25};
  spec.seeds_per_cell = 8;
  Dataset ds = generate_dataset(spec);

  std::vector<HistogramBin> bins = distribution_stats(ds);
  REQUIRE(bins.size() == 2 * 2 * 20);  // family x metric x 20 bins

  for (const std::string& fam : {std::string("ER"), std::string("GE")}) {
    for (const std::string& metric :
         {std::string("density"), std::string("radius")}) {
      std::vector<HistogramBin> cell;
      for (const HistogramBin& b : bins)
        if (b.family == fam && b.metric == metric) cell.push_back(b);
      REQUIRE(cell.size() == 20);
      int total = 0;
      for (std::size_t i = 0; i < cell.size(); ++i) {
        CHECK(cell[i].bin == static_cast<int>(i));
        CHECK(cell[i].hi >= cell[i].lo);
        total += cell[i].count;
      }
      CHECK(total == 8);
    }
  }

  // Degenerate range: a single instance lands in bin 0.
  Dataset solo;
  solo.entries.emplace_back(test::make_gstar());
  std::vector<HistogramBin> flat = distribution_stats(solo);
  REQUIRE(flat.size() == 40);
  for (const HistogramBin& b : flat) {
    CHECK(b.family == "SL");
    CHECK(b.count == (b.bin == 0 ? 1 : 0));
    CHECK(b.lo == b.hi);  // zero-width range
  }

  std::string csv = histogram_csv(flat);
  CHECK(csv.rfind("family,metric,bin,lo,hi,count\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 41);
}
