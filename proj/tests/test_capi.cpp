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

// Exercises the shared library strictly through its C interface; this
// binary links nothing else from the project.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <steiner/steiner_c.h>

#include <atomic>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace {

std::string scratch_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("stk-capi-" + tag + "-" + std::to_string(counter++));
  std::filesystem::create_directories(dir);
  return dir.string();
}

struct InstanceHandle {
  stk_instance* ptr = nullptr;
  ~InstanceHandle() { stk_instance_free(ptr); }
};

// The canonical 4-node fixture: a terminal triangle with unit-5 sides plus
// a cheap hub (node 3) at distance 3 from every terminal.
stk_instance* make_fixture() {
  const int us[] = {0, 0, 1, 0, 1, 2};
  const int vs[] = {1, 2, 2, 3, 3, 3};
  const int64_t ws[] = {5, 5, 5, 3, 3, 3};
  const int terminals[] = {0, 1, 2};
  stk_instance* out = nullptr;
  REQUIRE(stk_instance_create(4, 6, us, vs, ws, 1, terminals, 3, "gstar",
                              &out) == STK_OK);
  REQUIRE(out != nullptr);
  return out;
}

}  // namespace

TEST_CASE("version and error strings are always available") {
  CHECK(std::strcmp(stk_version(), "0.1.0") == 0);
  CHECK(stk_last_error() != nullptr);
}

TEST_CASE("instance accessors expose the fixture") {
  InstanceHandle inst{make_fixture()};
  CHECK(stk_instance_node_count(inst.ptr) == 4);
  CHECK(stk_instance_edge_count(inst.ptr) == 6);
  CHECK(stk_instance_terminal_count(inst.ptr) == 3);
  int terms[3] = {-1, -1, -1};
  stk_instance_terminals(inst.ptr, terms);
  CHECK(terms[0] == 0);
  CHECK(terms[1] == 1);
  CHECK(terms[2] == 2);
  CHECK(std::strcmp(stk_instance_id(inst.ptr), "gstar") == 0);
  CHECK(stk_instance_weight_denominator(inst.ptr) == 1);

  double density = 0.0;
  int radius = -1;
  REQUIRE(stk_instance_stats(inst.ptr, &density, &radius) == STK_OK);
  CHECK(density == doctest::Approx(1.0));
  CHECK(radius == 1);
}

TEST_CASE("instance creation reports invalid input") {
  stk_instance* out = nullptr;

  // Disconnected graph.
  const int terminals[] = {0, 1};
  CHECK(stk_instance_create(2, 0, nullptr, nullptr, nullptr, 1, terminals, 2,
                            "x", &out) == STK_ERROR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::strlen(stk_last_error()) > 0);

  // Self-loop.
  const int us[] = {0};
  const int vs[] = {0};
  const int64_t ws[] = {1};
  CHECK(stk_instance_create(2, 1, us, vs, ws, 1, terminals, 2, "x", &out) ==
        STK_ERROR_INVALID_ARGUMENT);

  // Too few terminals.
  const int us2[] = {0};
  const int vs2[] = {1};
  CHECK(stk_instance_create(2, 1, us2, vs2, ws, 1, terminals, 1, "x", &out) ==
        STK_ERROR_INVALID_ARGUMENT);
  CHECK(out == nullptr);

  CHECK(stk_instance_create(2, 1, us2, vs2, ws, 1, terminals, 2, "x",
                            nullptr) == STK_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("solvers and score-guided heuristics run through handles") {
  InstanceHandle inst{make_fixture()};

  stk_tree* tree = nullptr;
  REQUIRE(stk_solve(inst.ptr, "exact", nullptr, 14, &tree) == STK_OK);
  CHECK(stk_tree_cost_numerator(tree) == 9);
  CHECK(stk_tree_cost(tree) == doctest::Approx(9.0));
  REQUIRE(stk_tree_edge_count(tree) == 3);
  for (int i = 0; i < 3; ++i) {
    int u = -1, v = -1;
    stk_tree_edge(tree, i, &u, &v);
    CHECK(u >= 0);
    CHECK(u < v);
    CHECK(v == 3);  // all optimal edges attach to the hub
  }
  stk_tree_free(tree);

  tree = nullptr;
  REQUIRE(stk_solve(inst.ptr, "2approx", nullptr, 14, &tree) == STK_OK);
  CHECK(stk_tree_cost_numerator(tree) == 10);
  stk_tree_free(tree);

  const double hub_scores[] = {0.0, 0.0, 0.0, 0.9};
  const double flat_scores[] = {0.0, 0.0, 0.0, 0.0};
  for (const char* method : {"h1", "h2"}) {
    tree = nullptr;
    REQUIRE(stk_solve_with_scores(inst.ptr, method, hub_scores, &tree) ==
            STK_OK);
    CHECK(stk_tree_cost_numerator(tree) == 9);
    stk_tree_free(tree);

    tree = nullptr;
    REQUIRE(stk_solve_with_scores(inst.ptr, method, flat_scores, &tree) ==
            STK_OK);
    CHECK(stk_tree_cost_numerator(tree) == 10);
    stk_tree_free(tree);
  }

  tree = nullptr;
  CHECK(stk_solve(inst.ptr, "magic", nullptr, 14, &tree) ==
        STK_ERROR_INVALID_ARGUMENT);
  CHECK(tree == nullptr);
  CHECK(stk_solve(inst.ptr, "h1", nullptr, 14, &tree) ==
        STK_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(stk_last_error()).find("requires a model") !=
        std::string::npos);
  CHECK(stk_solve(inst.ptr, "exact", nullptr, 2, &tree) ==
        STK_ERROR_INVALID_ARGUMENT);
  CHECK(stk_solve_with_scores(inst.ptr, "exact", flat_scores, &tree) ==
        STK_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("instances round-trip through text and files") {
  InstanceHandle inst{make_fixture()};

  char* text = nullptr;
  REQUIRE(stk_instance_serialize(inst.ptr, &text) == STK_OK);
  REQUIRE(text != nullptr);
  std::string canonical(text);
  stk_string_free(text);
  CHECK(canonical.find("33D32945") != std::string::npos);

  char* warnings = reinterpret_cast<char*>(0x1);
  stk_instance* parsed = nullptr;
  REQUIRE(stk_instance_parse(canonical.c_str(), &warnings, &parsed) == STK_OK);
  CHECK(warnings == nullptr);  // clean input leaves no warnings
  char* text2 = nullptr;
  REQUIRE(stk_instance_serialize(parsed, &text2) == STK_OK);
  CHECK(canonical == text2);
  stk_string_free(text2);
  stk_instance_free(parsed);

  // A foreign section is skipped with a warning.
  std::string with_extra = canonical;
  std::size_t eof_pos = with_extra.rfind("EOF");
  REQUIRE(eof_pos != std::string::npos);
  with_extra.insert(eof_pos, "SECTION Coordinates\nDD 1 1.5 2.5\nEND\n\n");
  warnings = nullptr;
  parsed = nullptr;
  REQUIRE(stk_instance_parse(with_extra.c_str(), &warnings, &parsed) == STK_OK);
  REQUIRE(warnings != nullptr);
  CHECK(std::strlen(warnings) > 0);
  stk_string_free(warnings);
  stk_instance_free(parsed);

  std::string dir = scratch_dir("files");
  std::string path = dir + "/fixture.stp";
  REQUIRE(stk_instance_save(inst.ptr, path.c_str()) == STK_OK);
  stk_instance* loaded = nullptr;
  REQUIRE(stk_instance_load(path.c_str(), nullptr, &loaded) == STK_OK);
  char* text3 = nullptr;
  REQUIRE(stk_instance_serialize(loaded, &text3) == STK_OK);
  CHECK(canonical == text3);
  stk_string_free(text3);
  stk_instance_free(loaded);

  loaded = nullptr;
  CHECK(stk_instance_load((dir + "/absent.stp").c_str(), nullptr, &loaded) ==
        STK_ERROR_IO);
  CHECK(loaded == nullptr);

  CHECK(stk_instance_parse("not an stp file", nullptr, &loaded) ==
        STK_ERROR_PARSE);
  CHECK(std::string(stk_last_error()).find("line") != std::string::npos);
  CHECK(loaded == nullptr);
}

TEST_CASE("dataset generation, labeling, training and evaluation") {
  stk_dataset_spec spec;
  stk_dataset_spec_init(&spec);
  CHECK(std::string(spec.families) == "ER,WS,BA,GE");
  CHECK(spec.seeds_per_cell == 1);
  CHECK(spec.weighted == 0);

  const int nodes[] = {10};
  const double fractions[] = {0.3};
  spec.families = "ER";
  spec.node_counts = nodes;
  spec.node_count_len = 1;
  spec.terminal_fractions = fractions;
  spec.terminal_fraction_len = 1;
  spec.seeds_per_cell = 8;
  spec.weighted = 1;
  spec.base_seed = 11;

  stk_dataset* ds = nullptr;
  REQUIRE(stk_dataset_generate(&spec, &ds) == STK_OK);
  CHECK(stk_dataset_size(ds) == 8);
  CHECK(stk_dataset_train_count(ds) == 6);
  CHECK(stk_dataset_labeled_count(ds) == 0);

  int labeled = -1, skipped = -1, dropped = -1;
  char* log = reinterpret_cast<char*>(0x1);
  REQUIRE(stk_dataset_label(ds, 14, &labeled, &skipped, &dropped, &log) ==
          STK_OK);
  CHECK(labeled == 8);
  CHECK(skipped == 0);
  CHECK(dropped == 0);
  CHECK(log == nullptr);  // nothing to report
  CHECK(stk_dataset_labeled_count(ds) == 8);

  std::string dir = scratch_dir("dataset");
  REQUIRE(stk_dataset_save(ds, dir.c_str()) == STK_OK);
  stk_dataset* back = nullptr;
  REQUIRE(stk_dataset_load(dir.c_str(), &back) == STK_OK);
  CHECK(stk_dataset_size(back) == 8);
  CHECK(stk_dataset_train_count(back) == 6);
  CHECK(stk_dataset_labeled_count(back) == 8);
  stk_dataset_free(back);

  stk_train_options opts;
  stk_train_options_init(&opts);
  CHECK(opts.epochs == 500);
  CHECK(opts.learning_rate == doctest::Approx(1e-3));
  opts.epochs = 8;
  opts.learning_rate = 1e-2;
  opts.seed = 2;
  opts.conv_hidden = 6;
  opts.mlp_hidden = 5;

  stk_model* model = nullptr;
  REQUIRE(stk_model_train(ds, "gcn", &opts, &model) == STK_OK);
  CHECK(std::string(stk_model_variant(model)) == "gcn");

  REQUIRE(stk_model_loss_curve(model, nullptr, 0) == 8);
  double curve[8] = {0};
  REQUIRE(stk_model_loss_curve(model, curve, 8) == 8);
  for (double l : curve) CHECK(std::isfinite(l));
  double head[3] = {0};
  REQUIRE(stk_model_loss_curve(model, head, 3) == 8);
  for (int i = 0; i < 3; ++i) CHECK(head[i] == curve[i]);

  // Scores survive a save/load cycle bit for bit.
  stk_instance* inst = nullptr;
  std::string inst_path = dir + "/ER-n10-w-f30-s11.stp";
  REQUIRE(stk_instance_load(inst_path.c_str(), nullptr, &inst) == STK_OK);
  std::vector<double> scores(10, -1.0);
  REQUIRE(stk_model_score(model, inst, scores.data()) == STK_OK);
  for (double s : scores) {
    CHECK(s > 0.0);
    CHECK(s < 1.0);
  }
  std::string model_path = dir + "/model.json";
  REQUIRE(stk_model_save(model, model_path.c_str()) == STK_OK);
  stk_model* model2 = nullptr;
  REQUIRE(stk_model_load(model_path.c_str(), &model2) == STK_OK);
  CHECK(std::string(stk_model_variant(model2)) == "gcn");
  std::vector<double> scores2(10, -1.0);
  REQUIRE(stk_model_score(model2, inst, scores2.data()) == STK_OK);
  CHECK(scores == scores2);

  // Model-guided solve through the handle.
  stk_tree* tree = nullptr;
  REQUIRE(stk_solve(inst, "h2", model, 14, &tree) == STK_OK);
  CHECK(stk_tree_cost_numerator(tree) > 0);
  stk_tree_free(tree);
  stk_instance_free(inst);
  stk_model_free(model2);

  std::string json_path = dir + "/report.json";
  std::string csv_path = dir + "/report.csv";
  char* summary = nullptr;
  REQUIRE(stk_evaluate(ds, "exact,2approx,h2", model, 14, json_path.c_str(),
                       csv_path.c_str(), &summary) == STK_OK);
  REQUIRE(summary != nullptr);
  CHECK(std::string(summary).rfind("method,family,count,", 0) == 0);
  stk_string_free(summary);
  namespace fs = std::filesystem;
  CHECK(fs::file_size(json_path) > 0);
  CHECK(fs::file_size(csv_path) > 0);
  CHECK(fs::exists(dir + "/report_rows.csv"));

  char* hist = nullptr;
  REQUIRE(stk_distribution_stats(ds, &hist) == STK_OK);
  REQUIRE(hist != nullptr);
  CHECK(std::string(hist).rfind("family,metric,bin,lo,hi,count\n", 0) == 0);
  stk_string_free(hist);

  stk_model_free(model);
  stk_dataset_free(ds);
}

TEST_CASE("training and generation surface argument errors") {
  stk_dataset_spec spec;
  stk_dataset_spec_init(&spec);
  spec.families = "XX";
  stk_dataset* ds = nullptr;
  CHECK(stk_dataset_generate(&spec, &ds) == STK_ERROR_INVALID_ARGUMENT);
  CHECK(ds == nullptr);

  stk_dataset_spec_init(&spec);
  spec.families = "ER";
  const int nodes[] = {8};
  const double fractions[] = {0.3};
  spec.node_counts = nodes;
  spec.node_count_len = 1;
  spec.terminal_fractions = fractions;
  spec.terminal_fraction_len = 1;
  spec.seeds_per_cell = 2;
  REQUIRE(stk_dataset_generate(&spec, &ds) == STK_OK);

  stk_model* model = nullptr;
  // No labels yet.
  CHECK(stk_model_train(ds, "gcn", nullptr, &model) ==
        STK_ERROR_INVALID_ARGUMENT);
  CHECK(model == nullptr);
  CHECK(stk_model_train(ds, "mlp", nullptr, &model) ==
        STK_ERROR_INVALID_ARGUMENT);
  stk_dataset_free(ds);
}
