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

// Command-line front end. Deliberately built on the public C interface
// only, so it doubles as a living example of driving the shared library.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steiner/steiner_c.h"

namespace {

[[noreturn]] void die(const char* context) {
  std::fprintf(stderr, "error: %s: %s\n", context, stk_last_error());
  std::exit(1);
}

void check(stk_status status, const char* context) {
  if (status != STK_OK) die(context);
}

// RAII wrappers around the C handles.
struct InstanceDeleter {
  void operator()(stk_instance* p) const { stk_instance_free(p); }
};
struct ModelDeleter {
  void operator()(stk_model* p) const { stk_model_free(p); }
};
struct DatasetDeleter {
  void operator()(stk_dataset* p) const { stk_dataset_free(p); }
};
struct TreeDeleter {
  void operator()(stk_tree* p) const { stk_tree_free(p); }
};
using InstancePtr = std::unique_ptr<stk_instance, InstanceDeleter>;
using ModelPtr = std::unique_ptr<stk_model, ModelDeleter>;
using DatasetPtr = std::unique_ptr<stk_dataset, DatasetDeleter>;
using TreePtr = std::unique_ptr<stk_tree, TreeDeleter>;

InstancePtr load_instance(const std::string& path, bool print_warnings) {
  stk_instance* inst = nullptr;
  char* warnings = nullptr;
  check(stk_instance_load(path.c_str(), &warnings, &inst), "loading instance");
  if (warnings != nullptr) {
    if (print_warnings) std::fprintf(stderr, "warning: %s\n", warnings);
    stk_string_free(warnings);
  }
  return InstancePtr(inst);
}

DatasetPtr load_dataset(const std::string& dir) {
  stk_dataset* ds = nullptr;
  check(stk_dataset_load(dir.c_str(), &ds), "loading dataset");
  return DatasetPtr(ds);
}

ModelPtr load_model(const std::string& path) {
  stk_model* m = nullptr;
  check(stk_model_load(path.c_str(), &m), "loading model");
  return ModelPtr(m);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner tree toolkit: generators, solvers, node-scoring "
               "models and evaluation"};
  app.require_subcommand(1);

  // ---------------------------------------------------------------- generate
  auto* gen = app.add_subcommand(
      "generate", "Generate a dataset of random connected instances");
  std::string gen_out, gen_families = "ER,WS,BA,GE";
  std::vector<int> gen_nodes = {20};
  std::vector<double> gen_fractions = {0.2};
  int gen_seeds = 1;
  bool gen_weighted = false;
  std::uint64_t gen_seed = 0;
  double gen_er_p = -1.0, gen_ws_p = 0.2, gen_ge_eps = 0.5;
  int gen_ws_k = 6, gen_ba_m = 5;
  gen->add_option("--out", gen_out, "Output dataset directory")->required();
  gen->add_option("--families", gen_families,
                  "Comma-separated families (ER,WS,BA,GE)");
  gen->add_option("--nodes", gen_nodes, "Node counts to sweep");
  gen->add_option("--fractions", gen_fractions, "Terminal fractions to sweep");
  gen->add_option("--seeds-per-cell", gen_seeds,
                  "Instances per (family, n, fraction) cell");
  gen->add_flag("--weighted", gen_weighted,
                "Uniform random weights in 1..10 instead of unit weights");
  gen->add_option("--seed", gen_seed, "Base seed");
  gen->add_option("--er-p", gen_er_p, "ER edge probability (raised to the "
                  "connectivity threshold when lower; negative = auto)");
  gen->add_option("--ws-k", gen_ws_k, "WS ring-lattice degree (even)");
  gen->add_option("--ws-p", gen_ws_p, "WS rewiring probability");
  gen->add_option("--ba-m", gen_ba_m, "BA attachment count");
  gen->add_option("--ge-eps", gen_ge_eps, "GE connection-radius slack");

  // ------------------------------------------------------------------- label
  auto* label = app.add_subcommand(
      "label", "Compute exact optimal-tree node labels for a dataset");
  std::string label_dir;
  int label_cap = 14;
  label->add_option("--data", label_dir, "Dataset directory")->required();
  label->add_option("--cap", label_cap,
                    "Skip instances with more terminals than this");

  // ------------------------------------------------------------------- train
  auto* train = app.add_subcommand("train", "Train a node-scoring model");
  std::string train_dir, train_variant, train_out;
  stk_train_options topt;
  stk_train_options_init(&topt);
  bool train_no_dropout = false;
  train->add_option("--data", train_dir, "Dataset directory")->required();
  train->add_option("--variant", train_variant, "ff, gnn, gcn or gat")
      ->required();
  train->add_option("--out", train_out, "Output model file")->required();
  train->add_option("--epochs", topt.epochs, "Training epochs");
  train->add_option("--lr", topt.learning_rate, "Learning rate");
  train->add_option("--seed", topt.seed, "Initialization/shuffle seed");
  train->add_flag("--no-dropout", train_no_dropout, "Disable dropout");
  train->add_option("--ff-max-nodes", topt.ff_max_nodes,
                    "FF: maximum supported node count");
  train->add_option("--ff-hidden", topt.ff_hidden, "FF: hidden width");
  train->add_option("--gnn-state-dim", topt.gnn_state_dim,
                    "GNN: state dimension");
  train->add_option("--gnn-hidden", topt.gnn_hidden, "GNN: hidden width");
  train->add_option("--gnn-max-iters", topt.gnn_max_iters,
                    "GNN: diffusion iteration cap");
  train->add_option("--conv-hidden", topt.conv_hidden,
                    "GCN/GAT: convolution width");
  train->add_option("--mlp-hidden", topt.mlp_hidden,
                    "GCN/GAT: readout MLP width");
  train->add_option("--dropout-rate", topt.dropout_rate, "Dropout rate");

  // ------------------------------------------------------------------- score
  auto* score = app.add_subcommand(
      "score", "Print per-node inclusion scores for an instance");
  std::string score_model, score_instance;
  score->add_option("--model", score_model, "Model file")->required();
  score->add_option("--instance", score_instance, "STP instance file")
      ->required();

  // ------------------------------------------------------------------- solve
  auto* solve = app.add_subcommand("solve", "Solve a single instance");
  std::string solve_instance, solve_method = "2approx", solve_model;
  int solve_cap = 14;
  solve->add_option("--instance", solve_instance, "STP instance file")
      ->required();
  solve->add_option("--method", solve_method, "exact, 2approx, h1 or h2");
  solve->add_option("--model", solve_model, "Model file (for h1/h2)");
  solve->add_option("--cap", solve_cap, "Exact-solver terminal cap");

  // -------------------------------------------------------------------- eval
  auto* eval = app.add_subcommand(
      "eval", "Compare methods on the labeled test split of a dataset");
  std::string eval_dir, eval_methods = "2approx", eval_model, eval_json,
              eval_csv;
  int eval_cap = 14;
  eval->add_option("--data", eval_dir, "Dataset directory")->required();
  eval->add_option("--methods", eval_methods,
                   "Comma-separated methods (exact,2approx,h1,h2)");
  eval->add_option("--model", eval_model, "Model file (for h1/h2)");
  eval->add_option("--json", eval_json, "Write the full report as JSON");
  eval->add_option("--csv", eval_csv,
                   "Write aggregate and per-instance CSV tables");
  eval->add_option("--cap", eval_cap, "Exact-solver terminal cap");

  // ------------------------------------------------------------------- stats
  auto* stats = app.add_subcommand(
      "stats", "Density/radius histograms over a dataset");
  std::string stats_dir, stats_out;
  stats->add_option("--data", stats_dir, "Dataset directory")->required();
  stats->add_option("--out", stats_out, "Write CSV here instead of stdout");

  // ------------------------------------------------------------------- parse
  auto* parse = app.add_subcommand(
      "parse", "Validate an STP file and print a summary");
  std::string parse_instance;
  bool parse_canonical = false;
  parse->add_option("--instance", parse_instance, "STP instance file")
      ->required();
  parse->add_flag("--canonical", parse_canonical,
                  "Print the canonical serialization instead of a summary");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    stk_dataset_spec spec;
    stk_dataset_spec_init(&spec);
    spec.families = gen_families.c_str();
    spec.node_counts = gen_nodes.data();
    spec.node_count_len = static_cast<int>(gen_nodes.size());
    spec.terminal_fractions = gen_fractions.data();
    spec.terminal_fraction_len = static_cast<int>(gen_fractions.size());
    spec.seeds_per_cell = gen_seeds;
    spec.weighted = gen_weighted ? 1 : 0;
    spec.base_seed = gen_seed;
    spec.er_p = gen_er_p;
    spec.ws_k = gen_ws_k;
    spec.ws_p = gen_ws_p;
    spec.ba_m = gen_ba_m;
    spec.ge_eps = gen_ge_eps;

    stk_dataset* ds = nullptr;
    check(stk_dataset_generate(&spec, &ds), "generating dataset");
    DatasetPtr dataset(ds);
    check(stk_dataset_save(dataset.get(), gen_out.c_str()), "saving dataset");
    std::printf("wrote %d instances (%d train) to %s\n",
                stk_dataset_size(dataset.get()),
                stk_dataset_train_count(dataset.get()), gen_out.c_str());
  } else if (label->parsed()) {
    DatasetPtr dataset = load_dataset(label_dir);
    int labeled = 0, skipped = 0, dropped = 0;
    char* log = nullptr;
    check(stk_dataset_label(dataset.get(), label_cap, &labeled, &skipped,
                            &dropped, &log),
          "labeling dataset");
    if (log != nullptr) {
      std::fprintf(stderr, "%s\n", log);
      stk_string_free(log);
    }
    check(stk_dataset_save(dataset.get(), label_dir.c_str()),
          "saving dataset");
    std::printf("labeled %d instances (%d over cap, %d dropped)\n", labeled,
                skipped, dropped);
  } else if (train->parsed()) {
    DatasetPtr dataset = load_dataset(train_dir);
    topt.use_dropout = train_no_dropout ? 0 : 1;
    stk_model* m = nullptr;
    check(stk_model_train(dataset.get(), train_variant.c_str(), &topt, &m),
          "training model");
    ModelPtr model(m);
    check(stk_model_save(model.get(), train_out.c_str()), "saving model");
    int epochs = stk_model_loss_curve(model.get(), nullptr, 0);
    std::vector<double> curve(epochs > 0 ? epochs : 1);
    stk_model_loss_curve(model.get(), curve.data(), epochs);
    std::printf("trained %s for %d epochs; loss %.6f -> %.6f\n",
                stk_model_variant(model.get()), epochs,
                epochs > 0 ? curve.front() : 0.0,
                epochs > 0 ? curve[epochs - 1] : 0.0);
  } else if (score->parsed()) {
    ModelPtr model = load_model(score_model);
    InstancePtr inst = load_instance(score_instance, true);
    int n = stk_instance_node_count(inst.get());
    std::vector<double> scores(n);
    check(stk_model_score(model.get(), inst.get(), scores.data()),
          "scoring instance");
    for (int v = 0; v < n; ++v) std::printf("%d %.9f\n", v + 1, scores[v]);
  } else if (solve->parsed()) {
    InstancePtr inst = load_instance(solve_instance, true);
    ModelPtr model;
    if (!solve_model.empty()) model = load_model(solve_model);
    stk_tree* t = nullptr;
    check(stk_solve(inst.get(), solve_method.c_str(), model.get(), solve_cap,
                    &t),
          "solving instance");
    TreePtr tree(t);
    std::printf("cost %g\n", stk_tree_cost(tree.get()));
    for (int i = 0; i < stk_tree_edge_count(tree.get()); ++i) {
      int u = 0, v = 0;
      stk_tree_edge(tree.get(), i, &u, &v);
      std::printf("E %d %d\n", u + 1, v + 1);
    }
  } else if (eval->parsed()) {
    DatasetPtr dataset = load_dataset(eval_dir);
    ModelPtr model;
    if (!eval_model.empty()) model = load_model(eval_model);
    char* summary = nullptr;
    check(stk_evaluate(dataset.get(), eval_methods.c_str(), model.get(),
                       eval_cap, eval_json.empty() ? nullptr : eval_json.c_str(),
                       eval_csv.empty() ? nullptr : eval_csv.c_str(), &summary),
          "evaluating dataset");
    if (summary != nullptr) {
      std::printf("%s", summary);
      stk_string_free(summary);
    }
  } else if (stats->parsed()) {
    DatasetPtr dataset = load_dataset(stats_dir);
    char* csv = nullptr;
    check(stk_distribution_stats(dataset.get(), &csv), "computing stats");
    if (stats_out.empty()) {
      std::printf("%s", csv);
    } else {
      std::FILE* f = std::fopen(stats_out.c_str(), "wb");
      if (f == nullptr) {
        stk_string_free(csv);
        std::fprintf(stderr, "error: cannot open %s\n", stats_out.c_str());
        return 1;
      }
      std::fputs(csv, f);
      std::fclose(f);
    }
    stk_string_free(csv);
  } else if (parse->parsed()) {
    InstancePtr inst = load_instance(parse_instance, true);
    if (parse_canonical) {
      char* text = nullptr;
      check(stk_instance_serialize(inst.get(), &text), "serializing instance");
      std::printf("%s", text);
      stk_string_free(text);
    } else {
      double density = 0.0;
      int radius = 0;
      check(stk_instance_stats(inst.get(), &density, &radius),
            "computing stats");
      std::printf("id %s\nnodes %d\nedges %d\nterminals %d\ndensity %.6f\n"
                  "radius %d\n",
                  stk_instance_id(inst.get()),
                  stk_instance_node_count(inst.get()),
                  stk_instance_edge_count(inst.get()),
                  stk_instance_terminal_count(inst.get()), density, radius);
    }
  }
  return 0;
}
