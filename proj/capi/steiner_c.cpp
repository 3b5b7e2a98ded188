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

#include "steiner/steiner_c.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "steiner/approx.hpp"
#include "steiner/dataset.hpp"
#include "steiner/evaluate.hpp"
#include "steiner/exact.hpp"
#include "steiner/generate.hpp"
#include "steiner/graph.hpp"
#include "steiner/heuristics.hpp"
#include "steiner/models.hpp"
#include "steiner/steinlib.hpp"

using steiner::Cost;
using steiner::Dataset;
using steiner::Error;
using steiner::ModelParams;
using steiner::ParseError;
using steiner::SteinerTree;
using steiner::StpInstance;

struct stk_instance {
  StpInstance value;
};
struct stk_tree {
  SteinerTree value;
  std::int64_t denominator = 1;
};
struct stk_model {
  ModelParams value;
  std::string variant;
};
struct stk_dataset {
  Dataset value;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out += '\n';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

// Runs `fn`, translating exceptions into status codes + the thread-local
// message. `fn` must leave out-parameters untouched on failure.
template <typename Fn>
stk_status guarded(Fn&& fn) {
  try {
    fn();
    return STK_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return STK_ERROR_PARSE;
  } catch (const Error& e) {
    g_last_error = e.what();
    return STK_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return STK_ERROR_INTERNAL;
  }
}

stk_status invalid(const char* message) {
  g_last_error = message;
  return STK_ERROR_INVALID_ARGUMENT;
}

// File-open failures surface as Error with a "cannot open" prefix; report
// those as IO to the C caller.
stk_status classify_io(stk_status s) {
  if (s != STK_ERROR_INVALID_ARGUMENT) return s;
  if (g_last_error.rfind("cannot open", 0) == 0 ||
      g_last_error.rfind("failed writing", 0) == 0 ||
      g_last_error.rfind("cannot write", 0) == 0)
    return STK_ERROR_IO;
  return s;
}

}  // namespace

extern "C" {

const char* stk_last_error(void) { return g_last_error.c_str(); }

const char* stk_version(void) { return "0.1.0"; }

void stk_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

stk_status stk_instance_create(int node_count, int edge_count, const int* us,
                               const int* vs, const int64_t* weights,
                               int64_t weight_denominator,
                               const int* terminals, int terminal_count,
                               const char* id, stk_instance** out) {
  if (out == nullptr) return invalid("out must not be NULL");
  if (edge_count > 0 && (us == nullptr || vs == nullptr || weights == nullptr))
    return invalid("edge arrays must not be NULL");
  if (terminal_count > 0 && terminals == nullptr)
    return invalid("terminal array must not be NULL");
  return guarded([&] {
    std::vector<steiner::Edge> edges(edge_count);
    for (int i = 0; i < edge_count; ++i)
      edges[i] = {us[i], vs[i], weights[i]};
    StpInstance inst(steiner::Graph(node_count, std::move(edges),
                                    weight_denominator),
                     std::vector<int>(terminals, terminals + terminal_count),
                     id != nullptr ? id : "");
    *out = new stk_instance{std::move(inst)};
  });
}

stk_status stk_instance_load(const char* path, char** warnings,
                             stk_instance** out) {
  if (path == nullptr || out == nullptr)
    return invalid("path and out must not be NULL");
  return classify_io(guarded([&] {
    std::vector<std::string> warn;
    StpInstance inst = steiner::load_stp_file(path, &warn);
    if (warnings != nullptr)
      *warnings = warn.empty() ? nullptr : dup_string(join_lines(warn));
    *out = new stk_instance{std::move(inst)};
  }));
}

stk_status stk_instance_parse(const char* text, char** warnings,
                              stk_instance** out) {
  if (text == nullptr || out == nullptr)
    return invalid("text and out must not be NULL");
  return guarded([&] {
    std::vector<std::string> warn;
    StpInstance inst = steiner::parse_stp(text, &warn);
    if (warnings != nullptr)
      *warnings = warn.empty() ? nullptr : dup_string(join_lines(warn));
    *out = new stk_instance{std::move(inst)};
  });
}

stk_status stk_instance_serialize(const stk_instance* instance, char** text) {
  if (instance == nullptr || text == nullptr)
    return invalid("instance and text must not be NULL");
  return guarded([&] { *text = dup_string(steiner::serialize_stp(instance->value)); });
}

stk_status stk_instance_save(const stk_instance* instance, const char* path) {
  if (instance == nullptr || path == nullptr)
    return invalid("instance and path must not be NULL");
  return classify_io(
      guarded([&] { steiner::save_stp_file(instance->value, path); }));
}

int stk_instance_node_count(const stk_instance* instance) {
  return instance->value.graph().node_count();
}

int stk_instance_edge_count(const stk_instance* instance) {
  return instance->value.graph().edge_count();
}

int stk_instance_terminal_count(const stk_instance* instance) {
  return static_cast<int>(instance->value.terminals().size());
}

void stk_instance_terminals(const stk_instance* instance, int* out) {
  const auto& t = instance->value.terminals();
  std::copy(t.begin(), t.end(), out);
}

const char* stk_instance_id(const stk_instance* instance) {
  return instance->value.id().c_str();
}

int64_t stk_instance_weight_denominator(const stk_instance* instance) {
  return instance->value.graph().weight_denominator();
}

stk_status stk_instance_stats(const stk_instance* instance, double* density,
                              int* radius) {
  if (instance == nullptr) return invalid("instance must not be NULL");
  return guarded([&] {
    steiner::GraphStats st = steiner::graph_stats(instance->value.graph());
    if (density != nullptr) *density = st.density;
    if (radius != nullptr) *radius = st.radius;
  });
}

void stk_instance_free(stk_instance* instance) { delete instance; }

/* ------------------------------------------------------------------ */

int stk_tree_edge_count(const stk_tree* tree) {
  return static_cast<int>(tree->value.edges.size());
}

void stk_tree_edge(const stk_tree* tree, int index, int* u, int* v) {
  const steiner::Edge& e = tree->value.edges[index];
  if (u != nullptr) *u = e.u;
  if (v != nullptr) *v = e.v;
}

int64_t stk_tree_cost_numerator(const stk_tree* tree) {
  return tree->value.cost;
}

double stk_tree_cost(const stk_tree* tree) {
  return static_cast<double>(tree->value.cost) /
         static_cast<double>(tree->denominator);
}

void stk_tree_free(stk_tree* tree) { delete tree; }

/* ------------------------------------------------------------------ */

stk_status stk_model_load(const char* path, stk_model** out) {
  if (path == nullptr || out == nullptr)
    return invalid("path and out must not be NULL");
  return classify_io(guarded([&] {
    ModelParams p = steiner::load_model(path);
    std::string name = steiner::variant_name(p.variant);
    *out = new stk_model{std::move(p), std::move(name)};
  }));
}

stk_status stk_model_save(const stk_model* model, const char* path) {
  if (model == nullptr || path == nullptr)
    return invalid("model and path must not be NULL");
  return classify_io(guarded([&] { steiner::save_model(model->value, path); }));
}

const char* stk_model_variant(const stk_model* model) {
  return model->variant.c_str();
}

stk_status stk_model_score(const stk_model* model,
                           const stk_instance* instance, double* scores) {
  if (model == nullptr || instance == nullptr || scores == nullptr)
    return invalid("model, instance and scores must not be NULL");
  return guarded([&] {
    std::vector<double> s = steiner::predict_scores(model->value, instance->value);
    std::copy(s.begin(), s.end(), scores);
  });
}

void stk_model_free(stk_model* model) { delete model; }

/* ------------------------------------------------------------------ */

stk_status stk_solve(const stk_instance* instance, const char* method,
                     const stk_model* model_or_null, int exact_terminal_cap,
                     stk_tree** out) {
  if (instance == nullptr || method == nullptr || out == nullptr)
    return invalid("instance, method and out must not be NULL");
  return guarded([&] {
    const std::string m = method;
    SteinerTree tree;
    if (m == "exact") {
      tree = steiner::dreyfus_wagner(instance->value, exact_terminal_cap).tree;
    } else if (m == "2approx") {
      tree = steiner::two_approx(instance->value);
    } else if (m == "h1" || m == "h2") {
      if (model_or_null == nullptr)
        throw Error("method " + m + " requires a model");
      std::vector<double> scores =
          steiner::predict_scores(model_or_null->value, instance->value);
      tree = m == "h1"
                 ? steiner::h1_induced_mst(instance->value, scores)
                 : steiner::h2_terminal_promotion(instance->value, scores);
    } else {
      throw Error("unknown method '" + m +
                  "' (expected exact, 2approx, h1 or h2)");
    }
    *out = new stk_tree{std::move(tree),
                        instance->value.graph().weight_denominator()};
  });
}

stk_status stk_solve_with_scores(const stk_instance* instance,
                                 const char* method, const double* scores,
                                 stk_tree** out) {
  if (instance == nullptr || method == nullptr || scores == nullptr ||
      out == nullptr)
    return invalid("instance, method, scores and out must not be NULL");
  return guarded([&] {
    const std::string m = method;
    std::vector<double> s(scores,
                          scores + instance->value.graph().node_count());
    SteinerTree tree;
    if (m == "h1")
      tree = steiner::h1_induced_mst(instance->value, s);
    else if (m == "h2")
      tree = steiner::h2_terminal_promotion(instance->value, s);
    else
      throw Error("unknown score-based method '" + m + "' (expected h1 or h2)");
    *out = new stk_tree{std::move(tree),
                        instance->value.graph().weight_denominator()};
  });
}

/* ------------------------------------------------------------------ */

void stk_dataset_spec_init(stk_dataset_spec* spec) {
  spec->families = "ER,WS,BA,GE";
  spec->node_counts = nullptr;
  spec->node_count_len = 0;
  spec->terminal_fractions = nullptr;
  spec->terminal_fraction_len = 0;
  spec->seeds_per_cell = 1;
  spec->weighted = 0;
  spec->base_seed = 0;
  spec->er_p = -1.0;
  spec->ws_k = 6;
  spec->ws_p = 0.2;
  spec->ba_m = 5;
  spec->ge_eps = 0.5;
}

namespace {

steiner::DatasetSpec to_cpp_spec(const stk_dataset_spec& spec) {
  steiner::DatasetSpec out;
  out.families.clear();
  std::string families = spec.families != nullptr ? spec.families : "";
  std::istringstream fs(families);
  std::string tok;
  while (std::getline(fs, tok, ','))
    if (!tok.empty()) out.families.push_back(steiner::family_from_name(tok));
  if (spec.node_counts != nullptr && spec.node_count_len > 0)
    out.node_counts.assign(spec.node_counts,
                           spec.node_counts + spec.node_count_len);
  if (spec.terminal_fractions != nullptr && spec.terminal_fraction_len > 0)
    out.terminal_fractions.assign(
        spec.terminal_fractions,
        spec.terminal_fractions + spec.terminal_fraction_len);
  out.seeds_per_cell = spec.seeds_per_cell;
  out.weighted = spec.weighted != 0;
  out.base_seed = spec.base_seed;
  out.er_p = spec.er_p;
  out.ws_k = spec.ws_k;
  out.ws_p = spec.ws_p;
  out.ba_m = spec.ba_m;
  out.ge_eps = spec.ge_eps;
  return out;
}

}  // namespace

stk_status stk_dataset_generate(const stk_dataset_spec* spec,
                                stk_dataset** out) {
  if (spec == nullptr || out == nullptr)
    return invalid("spec and out must not be NULL");
  return guarded([&] {
    *out = new stk_dataset{steiner::generate_dataset(to_cpp_spec(*spec))};
  });
}

stk_status stk_dataset_load(const char* dir, stk_dataset** out) {
  if (dir == nullptr || out == nullptr)
    return invalid("dir and out must not be NULL");
  return classify_io(guarded([&] {
    *out = new stk_dataset{steiner::load_dataset(dir)};
  }));
}

stk_status stk_dataset_save(const stk_dataset* dataset, const char* dir) {
  if (dataset == nullptr || dir == nullptr)
    return invalid("dataset and dir must not be NULL");
  return classify_io(
      guarded([&] { steiner::save_dataset(dataset->value, dir); }));
}

stk_status stk_dataset_label(stk_dataset* dataset, int terminal_cap,
                             int* labeled, int* skipped_over_cap, int* dropped,
                             char** log) {
  if (dataset == nullptr) return invalid("dataset must not be NULL");
  return guarded([&] {
    steiner::LabelStats st = steiner::label_dataset(dataset->value, terminal_cap);
    if (labeled != nullptr) *labeled = st.labeled;
    if (skipped_over_cap != nullptr) *skipped_over_cap = st.skipped_over_cap;
    if (dropped != nullptr) *dropped = st.dropped;
    if (log != nullptr)
      *log = st.log.empty() ? nullptr : dup_string(join_lines(st.log));
  });
}

int stk_dataset_size(const stk_dataset* dataset) {
  return static_cast<int>(dataset->value.entries.size());
}

int stk_dataset_train_count(const stk_dataset* dataset) {
  return dataset->value.train_count();
}

int stk_dataset_labeled_count(const stk_dataset* dataset) {
  return dataset->value.labeled_count();
}

void stk_dataset_free(stk_dataset* dataset) { delete dataset; }

/* ------------------------------------------------------------------ */

void stk_train_options_init(stk_train_options* options) {
  steiner::TrainConfig cfg;
  steiner::ModelHyperparams hyper;
  options->epochs = cfg.epochs;
  options->learning_rate = cfg.learning_rate;
  options->seed = cfg.seed;
  options->use_dropout = cfg.use_dropout ? 1 : 0;
  options->ff_max_nodes = hyper.ff_max_nodes;
  options->ff_hidden = hyper.ff_hidden;
  options->gnn_state_dim = hyper.gnn_state_dim;
  options->gnn_hidden = hyper.gnn_hidden;
  options->gnn_max_iters = hyper.gnn_max_iters;
  options->conv_hidden = hyper.conv_hidden;
  options->mlp_hidden = hyper.mlp_hidden;
  options->dropout_rate = hyper.dropout_rate;
}

stk_status stk_model_train(const stk_dataset* dataset, const char* variant,
                           const stk_train_options* options, stk_model** out) {
  if (dataset == nullptr || variant == nullptr || out == nullptr)
    return invalid("dataset, variant and out must not be NULL");
  return guarded([&] {
    stk_train_options defaults;
    stk_train_options_init(&defaults);
    const stk_train_options& opt = options != nullptr ? *options : defaults;

    steiner::TrainConfig cfg;
    cfg.epochs = opt.epochs;
    cfg.learning_rate = opt.learning_rate;
    cfg.seed = opt.seed;
    cfg.use_dropout = opt.use_dropout != 0;
    steiner::ModelHyperparams hyper;
    hyper.ff_max_nodes = opt.ff_max_nodes;
    hyper.ff_hidden = opt.ff_hidden;
    hyper.gnn_state_dim = opt.gnn_state_dim;
    hyper.gnn_hidden = opt.gnn_hidden;
    hyper.gnn_max_iters = opt.gnn_max_iters;
    hyper.conv_hidden = opt.conv_hidden;
    hyper.mlp_hidden = opt.mlp_hidden;
    hyper.dropout_rate = opt.dropout_rate;

    ModelParams p = steiner::train_model(steiner::variant_from_name(variant),
                                         dataset->value, cfg, hyper);
    std::string name = steiner::variant_name(p.variant);
    *out = new stk_model{std::move(p), std::move(name)};
  });
}

int stk_model_loss_curve(const stk_model* model, double* out, int capacity) {
  const auto& curve = model->value.loss_curve;
  if (out != nullptr) {
    int n = std::min<int>(capacity, static_cast<int>(curve.size()));
    std::copy_n(curve.begin(), n, out);
  }
  return static_cast<int>(curve.size());
}

/* ------------------------------------------------------------------ */

stk_status stk_evaluate(const stk_dataset* dataset, const char* methods,
                        const stk_model* model_or_null, int exact_terminal_cap,
                        const char* json_path, const char* csv_path,
                        char** summary) {
  if (dataset == nullptr || methods == nullptr)
    return invalid("dataset and methods must not be NULL");
  return classify_io(guarded([&] {
    std::vector<std::string> method_list;
    std::istringstream ms(methods);
    std::string tok;
    while (std::getline(ms, tok, ','))
      if (!tok.empty()) method_list.push_back(tok);

    steiner::EvalReport report = steiner::evaluate_methods(
        dataset->value, method_list,
        model_or_null != nullptr ? &model_or_null->value : nullptr,
        exact_terminal_cap);
    if (json_path != nullptr) steiner::write_report_json(report, json_path);
    if (csv_path != nullptr) steiner::write_report_csv(report, csv_path);

    if (summary != nullptr) {
      std::ostringstream os;
      os << "method,family,count,mean_ratio,max_ratio,total_seconds\n";
      os.precision(6);
      os << std::fixed;
      for (const steiner::EvalCell& c : report.cells)
        os << c.method << "," << c.family << "," << c.count << ","
           << c.mean_ratio << "," << c.max_ratio << "," << c.total_seconds
           << "\n";
      if (report.unlabeled_skipped > 0)
        os << "# skipped " << report.unlabeled_skipped
           << " unlabeled test entries\n";
      *summary = dup_string(os.str());
    }
  }));
}

stk_status stk_distribution_stats(const stk_dataset* dataset, char** csv) {
  if (dataset == nullptr || csv == nullptr)
    return invalid("dataset and csv must not be NULL");
  return guarded([&] {
    *csv = dup_string(
        steiner::histogram_csv(steiner::distribution_stats(dataset->value)));
  });
}

} /* extern "C" */
