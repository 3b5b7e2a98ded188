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

#include "steiner/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <memory>
#include <numeric>

#include <json.hpp>

namespace steiner {

std::string variant_name(ModelVariant v) {
  switch (v) {
    case ModelVariant::FF: return "ff";
    case ModelVariant::GNN: return "gnn";
    case ModelVariant::GCN: return "gcn";
    case ModelVariant::GAT: return "gat";
  }
  throw Error("unknown model variant");
}

ModelVariant variant_from_name(const std::string& name) {
  std::string low = name;
  for (char& c : low) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "ff") return ModelVariant::FF;
  if (low == "gnn") return ModelVariant::GNN;
  if (low == "gcn") return ModelVariant::GCN;
  if (low == "gat") return ModelVariant::GAT;
  throw Error("unknown model variant '" + name + "' (expected ff, gnn, gcn or gat)");
}

std::vector<BlockShape> block_shapes(ModelVariant v, const ModelHyperparams& h) {
  const int f = kFeatureCount;
  switch (v) {
    case ModelVariant::FF: {
      const int nm = h.ff_max_nodes;
      const int d = nm * (nm - 1) / 2 + nm;
      const int hh = h.ff_hidden;
      return {{"w0", d, hh, false},  {"b0", 1, hh, true},
              {"w1", hh, hh, false}, {"b1", 1, hh, true},
              {"w2", hh, nm, false}, {"b2", 1, nm, true}};
    }
    case ModelVariant::GNN: {
      const int s = h.gnn_state_dim;
      const int hh = h.gnn_hidden;
      const int din = 2 * f + s + 1;  // [own label | edge label | state | label]
      const int rin = s + f;          // [state | own label]
      return {{"dw0", din, hh, false}, {"db0", 1, hh, true},
              {"dw1", hh, s, false},   {"db1", 1, s, true},
              {"fw0", rin, hh, false}, {"fb0", 1, hh, true},
              {"fw1", hh, 1, false},   {"fb1", 1, 1, true}};
    }
    case ModelVariant::GCN: {
      const int ch = h.conv_hidden;
      const int mh = h.mlp_hidden;
      // The readout takes [conv output | raw features]: smoothing dilutes
      // per-node indicators, so the head keeps a direct path to them.
      return {{"c0w", f, ch, false},  {"c0b", 1, ch, true},
              {"c1w", ch, ch, false}, {"c1b", 1, ch, true},
              {"m0w", ch + f, mh, false}, {"m0b", 1, mh, true},
              {"m1w", mh, mh, false}, {"m1b", 1, mh, true},
              {"m2w", mh, 1, false},  {"m2b", 1, 1, true}};
    }
    case ModelVariant::GAT: {
      const int ch = h.conv_hidden;
      const int mh = h.mlp_hidden;
      return {{"a0w", f, ch, false},  {"a0a", 2 * ch, 1, false},
              {"a0b", 1, ch, true},   {"a1w", ch, ch, false},
              {"a1a", 2 * ch, 1, false}, {"a1b", 1, ch, true},
              {"m0w", ch + f, mh, false}, {"m0b", 1, mh, true},
              {"m1w", mh, mh, false}, {"m1b", 1, mh, true},
              {"m2w", mh, 1, false},  {"m2b", 1, 1, true}};
    }
  }
  throw Error("unknown model variant");
}

ModelParams init_model(ModelVariant v, const ModelHyperparams& h,
                       std::uint64_t seed) {
  ModelParams p;
  p.variant = v;
  p.hyper = h;
  p.init_seed = seed;
  Rng rng(seed);
  for (const BlockShape& bs : block_shapes(v, h)) {
    Mat m(bs.rows, bs.cols);
    if (!bs.bias) {
      double limit = std::sqrt(6.0 / (bs.rows + bs.cols));
      for (double& x : m.v) x = (2.0 * rng.real() - 1.0) * limit;
    }
    p.blocks.push_back(std::move(m));
  }
  return p;
}

SparseMat normalized_adjacency(const Graph& g) {
  const int n = g.node_count();
  SparseMat s;
  s.n = n;
  s.row_ptr.assign(n + 1, 0);
  std::vector<double> inv_sqrt(n);
  for (int i = 0; i < n; ++i) inv_sqrt[i] = 1.0 / std::sqrt(g.degree(i) + 1.0);
  for (int i = 0; i < n; ++i) {
    // Row i: neighbors plus the self-loop, columns ascending.
    const auto& nb = g.neighbors(i);
    bool self_done = false;
    auto push = [&](int j, double val) {
      s.col.push_back(j);
      s.val.push_back(val);
    };
    for (auto [j, w] : nb) {
      (void)w;
      if (!self_done && i < j) {
        push(i, inv_sqrt[i] * inv_sqrt[i]);
        self_done = true;
      }
      push(j, inv_sqrt[i] * inv_sqrt[j]);
    }
    if (!self_done) push(i, inv_sqrt[i] * inv_sqrt[i]);
    s.row_ptr[i + 1] = static_cast<int>(s.col.size());
  }
  return s;
}

namespace {

Mat features_to_mat(const FeatureMatrix& f) {
  Mat m(f.rows, f.cols);
  m.v = f.data;
  return m;
}

// Single forward construction shared by prediction, loss evaluation and
// training. The tape owns all intermediate values; `adj` must stay alive as
// long as the tape (spmm nodes reference it).
struct Forward {
  Tape tape;
  std::vector<int> param_ids;
  int logits = -1;
  int gnn_iterations = 0;
  std::unique_ptr<SparseMat> adj;
};

int maybe_dropout(Tape& t, int a, Rng* rng, double rate) {
  if (rng == nullptr || rate <= 0.0) return a;
  const double keep = 1.0 - rate;
  std::vector<std::uint8_t> mask(t.value(a).size());
  for (auto& m : mask) m = rng->real() < keep ? 1 : 0;
  return t.dropout(a, std::move(mask), keep);
}

// x * W + b as a tape subgraph.
int dense(Tape& t, int x, int w, int b) {
  return t.add_row_broadcast(t.matmul(x, w), b);
}

Forward build_ff(const ModelParams& p, const StpInstance& inst) {
  const Graph& g = inst.graph();
  const int n = g.node_count();
  const int nm = p.hyper.ff_max_nodes;
  if (n > nm)
    throw Error("instance has " + std::to_string(n) +
                " nodes but the model supports at most " + std::to_string(nm));

  // Flattened upper-triangle adjacency indicator followed by the terminal
  // indicator, both padded out to the model's maximum size.
  Mat x(1, nm * (nm - 1) / 2 + nm);
  int idx = 0;
  for (int i = 0; i < nm; ++i)
    for (int j = i + 1; j < nm; ++j)
      x.v[idx++] = (j < n && g.has_edge(i, j)) ? 1.0 : 0.0;
  for (int i = 0; i < nm; ++i)
    x.v[idx++] = (i < n && inst.is_terminal(i)) ? 1.0 : 0.0;

  Forward fwd;
  Tape& t = fwd.tape;
  for (const Mat& b : p.blocks) fwd.param_ids.push_back(t.leaf(b, true));
  const auto& pb = fwd.param_ids;
  int in = t.leaf(std::move(x));
  int h1 = t.relu(dense(t, in, pb[0], pb[1]));
  int h2 = t.relu(dense(t, h1, pb[2], pb[3]));
  fwd.logits = dense(t, h2, pb[4], pb[5]);  // 1 x ff_max_nodes
  return fwd;
}

Forward build_gnn(const ModelParams& p, const StpInstance& inst,
                  const FeatureMatrix& feats, int fixed_iters) {
  const Graph& g = inst.graph();
  const int n = g.node_count();
  const double max_w = static_cast<double>(g.max_weight());

  // Directed message list: one entry per (neighbor -> node) pair.
  std::vector<int> src, dst;
  std::vector<double> elab;
  for (int u = 0; u < n; ++u)
    for (auto [v, w] : g.neighbors(u)) {
      dst.push_back(u);
      src.push_back(v);
      elab.push_back(static_cast<double>(w) / max_w);
    }
  Mat elab_m(static_cast<int>(elab.size()), 1);
  elab_m.v = elab;

  Forward fwd;
  Tape& t = fwd.tape;
  for (const Mat& b : p.blocks) fwd.param_ids.push_back(t.leaf(b, true));
  const auto& pb = fwd.param_ids;
  int labels = t.leaf(features_to_mat(feats));
  int edge_labels = t.leaf(std::move(elab_m));
  int state = t.leaf(Mat(n, p.hyper.gnn_state_dim));  // zero initial state

  const int cap = fixed_iters >= 0 ? fixed_iters : p.hyper.gnn_max_iters;
  for (int it = 0; it < cap; ++it) {
    int msg_in = t.concat_cols({t.gather_rows(labels, dst), edge_labels,
                                t.gather_rows(state, src),
                                t.gather_rows(labels, src)});
    int hidden = t.tanh_act(dense(t, msg_in, pb[0], pb[1]));
    int messages = dense(t, hidden, pb[2], pb[3]);
    int next = t.segment_sum(messages, dst, n);

    const Mat& cur = t.value(state);
    const Mat& nxt = t.value(next);
    double diff = 0.0, mag = 0.0;
    for (std::size_t i = 0; i < nxt.size(); ++i) {
      diff = std::max(diff, std::abs(nxt.v[i] - cur.v[i]));
      mag = std::max(mag, std::abs(nxt.v[i]));
    }
    state = next;
    ++fwd.gnn_iterations;
    if (fixed_iters < 0) {
      if (mag > p.hyper.gnn_divergence)
        throw Error("diffusion diverged after " +
                    std::to_string(fwd.gnn_iterations) +
                    " iterations (state magnitude " + std::to_string(mag) + ")");
      if (diff < p.hyper.gnn_tol) break;
    }
  }

  int readout_in = t.concat_cols({state, labels});
  int hidden = t.tanh_act(dense(t, readout_in, pb[4], pb[5]));
  fwd.logits = dense(t, hidden, pb[6], pb[7]);  // n x 1
  return fwd;
}

Forward build_gcn(const ModelParams& p, const StpInstance& inst,
                  const FeatureMatrix& feats, Rng* dropout_rng) {
  Forward fwd;
  fwd.adj = std::make_unique<SparseMat>(normalized_adjacency(inst.graph()));
  Tape& t = fwd.tape;
  for (const Mat& b : p.blocks) fwd.param_ids.push_back(t.leaf(b, true));
  const auto& pb = fwd.param_ids;
  const double rate = p.hyper.dropout_rate;

  int x = t.leaf(features_to_mat(feats));
  int h = t.relu(dense(t, t.spmm(fwd.adj.get(), x), pb[0], pb[1]));
  h = maybe_dropout(t, h, dropout_rng, rate);
  h = t.relu(dense(t, t.spmm(fwd.adj.get(), h), pb[2], pb[3]));
  h = maybe_dropout(t, h, dropout_rng, rate);
  // Readout MLP on [conv output | raw features], without dropout: masking
  // here mostly injects noise into the per-node head and stalls convergence.
  h = t.relu(dense(t, t.concat_cols({h, x}), pb[4], pb[5]));
  h = t.relu(dense(t, h, pb[6], pb[7]));
  fwd.logits = dense(t, h, pb[8], pb[9]);  // n x 1
  return fwd;
}

Forward build_gat(const ModelParams& p, const StpInstance& inst,
                  const FeatureMatrix& feats, Rng* dropout_rng) {
  const Graph& g = inst.graph();
  const int n = g.node_count();

  // Attention neighborhoods include the node itself; entries are grouped by
  // destination with ascending sources, so the layout is deterministic.
  std::vector<int> src, dst;
  for (int u = 0; u < n; ++u) {
    bool self_done = false;
    for (auto [v, w] : g.neighbors(u)) {
      (void)w;
      if (!self_done && u < v) {
        dst.push_back(u);
        src.push_back(u);
        self_done = true;
      }
      dst.push_back(u);
      src.push_back(v);
    }
    if (!self_done) {
      dst.push_back(u);
      src.push_back(u);
    }
  }

  Forward fwd;
  Tape& t = fwd.tape;
  for (const Mat& b : p.blocks) fwd.param_ids.push_back(t.leaf(b, true));
  const auto& pb = fwd.param_ids;
  const double rate = p.hyper.dropout_rate;
  const double slope = p.hyper.leaky_slope;

  auto attention_layer = [&](int h, int w, int a, int b) {
    int wh = t.matmul(h, w);
    int cat = t.concat_cols({t.gather_rows(wh, dst), t.gather_rows(wh, src)});
    int scores = t.leaky_relu(t.matmul(cat, a), slope);
    int alpha = t.segment_softmax(scores, dst, n);
    int weighted = t.scale_rows(t.gather_rows(wh, src), alpha);
    int agg = t.segment_sum(weighted, dst, n);
    return t.elu(t.add_row_broadcast(agg, b));
  };

  int x = t.leaf(features_to_mat(feats));
  int h = attention_layer(x, pb[0], pb[1], pb[2]);
  h = maybe_dropout(t, h, dropout_rng, rate);
  h = attention_layer(h, pb[3], pb[4], pb[5]);
  h = maybe_dropout(t, h, dropout_rng, rate);
  // Readout MLP on [attention output | raw features], mirroring the
  // convolution variant; no dropout in the head.
  h = t.relu(dense(t, t.concat_cols({h, x}), pb[6], pb[7]));
  h = t.relu(dense(t, h, pb[8], pb[9]));
  fwd.logits = dense(t, h, pb[10], pb[11]);  // n x 1
  return fwd;
}

Forward build_forward(const ModelParams& p, const StpInstance& inst,
                      const FeatureMatrix& feats, Rng* dropout_rng,
                      int gnn_fixed_iters) {
  switch (p.variant) {
    case ModelVariant::FF: return build_ff(p, inst);
    case ModelVariant::GNN: return build_gnn(p, inst, feats, gnn_fixed_iters);
    case ModelVariant::GCN: return build_gcn(p, inst, feats, dropout_rng);
    case ModelVariant::GAT: return build_gat(p, inst, feats, dropout_rng);
  }
  throw Error("unknown model variant");
}

void check_schema(const ModelParams& p) {
  if (p.feature_schema != kFeatureSchemaVersion)
    throw Error("model was built for feature schema '" + p.feature_schema +
                "' but this build provides '" + kFeatureSchemaVersion + "'");
}

// Loss targets in logit order: node labels, padded for the FF variant.
std::vector<double> loss_targets(const ModelParams& p,
                                 const std::vector<int>& labels) {
  std::vector<double> t(labels.begin(), labels.end());
  if (p.variant == ModelVariant::FF)
    t.resize(static_cast<std::size_t>(p.hyper.ff_max_nodes), 0.0);
  return t;
}

}  // namespace

std::vector<double> predict_scores(const ModelParams& params,
                                   const StpInstance& instance) {
  check_schema(params);
  FeatureMatrix feats = node_features(instance);
  Forward fwd = build_forward(params, instance, feats, nullptr, -1);
  const Mat& z = fwd.tape.value(fwd.logits);
  const int n = instance.graph().node_count();
  std::vector<double> scores(n);
  for (int i = 0; i < n; ++i) {
    double zi = z.v[i];
    scores[i] = zi >= 0.0 ? 1.0 / (1.0 + std::exp(-zi))
                          : std::exp(zi) / (1.0 + std::exp(zi));
  }
  return scores;
}

LossEval evaluate_loss(const ModelParams& params, const StpInstance& instance,
                       const std::vector<int>& labels, bool with_gradients,
                       Rng* dropout_rng, int gnn_fixed_iters) {
  check_schema(params);
  if (static_cast<int>(labels.size()) != instance.graph().node_count())
    throw Error("label count does not match node count");
  FeatureMatrix feats = node_features(instance);
  Forward fwd =
      build_forward(params, instance, feats, dropout_rng, gnn_fixed_iters);
  int loss_id =
      fwd.tape.mean_bce_with_logits(fwd.logits, loss_targets(params, labels));

  LossEval out;
  out.loss = fwd.tape.value(loss_id).v[0];
  out.gnn_iterations = fwd.gnn_iterations;
  if (with_gradients) {
    fwd.tape.backward(loss_id);
    out.gradients.reserve(fwd.param_ids.size());
    for (int id : fwd.param_ids) out.gradients.push_back(fwd.tape.grad(id));
  }
  return out;
}

namespace {

struct AdamState {
  std::vector<Mat> m, v;
  std::int64_t t = 0;
};

void adam_step(std::vector<Mat>& blocks, const std::vector<int>& param_ids,
               const Tape& tape, AdamState& st, const TrainConfig& cfg) {
  ++st.t;
  const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(st.t));
  const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(st.t));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Mat& g = tape.grad(param_ids[b]);
    Mat& m = st.m[b];
    Mat& v = st.v[b];
    Mat& p = blocks[b];
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double gi = g.v[i];
      m.v[i] = cfg.beta1 * m.v[i] + (1.0 - cfg.beta1) * gi;
      v.v[i] = cfg.beta2 * v.v[i] + (1.0 - cfg.beta2) * gi * gi;
      p.v[i] -= cfg.learning_rate * (m.v[i] / bc1) /
                (std::sqrt(v.v[i] / bc2) + cfg.eps);
    }
  }
}

}  // namespace

ModelParams train_model(ModelVariant v, const Dataset& dataset,
                        const TrainConfig& config,
                        const ModelHyperparams& hyper) {
  std::vector<const DatasetEntry*> train;
  for (const DatasetEntry& e : dataset.entries)
    if (e.train_split && e.labels) train.push_back(&e);
  if (train.empty())
    throw Error("no labeled training instances in the dataset");
  if (v == ModelVariant::FF)
    for (const DatasetEntry* e : train)
      if (e->instance.graph().node_count() > hyper.ff_max_nodes)
        throw Error("instance '" + e->instance.id() +
                    "' exceeds the feedforward model's maximum node count");

  // Features and targets are instance-invariant: compute once.
  std::vector<FeatureMatrix> feats;
  feats.reserve(train.size());
  for (const DatasetEntry* e : train) feats.push_back(node_features(e->instance));

  ModelParams params = init_model(v, hyper, config.seed);
  std::vector<std::vector<double>> targets;
  targets.reserve(train.size());
  for (const DatasetEntry* e : train)
    targets.push_back(loss_targets(params, *e->labels));

  AdamState st;
  for (const Mat& b : params.blocks) {
    st.m.emplace_back(b.rows, b.cols);
    st.v.emplace_back(b.rows, b.cols);
  }

  const bool has_dropout =
      config.use_dropout &&
      (v == ModelVariant::GCN || v == ModelVariant::GAT) &&
      hyper.dropout_rate > 0.0;
  Rng rng(config.seed + 0x9E3779B97F4A7C15ull);

  std::vector<int> order(train.size());
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    double loss_sum = 0.0;
    for (int idx : order) {
      Forward fwd = build_forward(params, train[idx]->instance, feats[idx],
                                  has_dropout ? &rng : nullptr, -1);
      int loss_id = fwd.tape.mean_bce_with_logits(fwd.logits, targets[idx]);
      const double loss = fwd.tape.value(loss_id).v[0];
      if (!std::isfinite(loss))
        throw Error("training loss became non-finite at epoch " +
                    std::to_string(epoch));
      loss_sum += loss;
      fwd.tape.backward(loss_id);
      adam_step(params.blocks, fwd.param_ids, fwd.tape, st, config);
    }
    params.loss_curve.push_back(loss_sum / static_cast<double>(train.size()));
  }
  return params;
}

void save_model(const ModelParams& params, const std::string& path) {
  nlohmann::json j;
  j["format"] = "stp-model-v1";
  j["variant"] = variant_name(params.variant);
  j["feature_schema"] = params.feature_schema;
  j["init_seed"] = params.init_seed;
  const ModelHyperparams& h = params.hyper;
  j["hyper"] = {
      {"ff_max_nodes", h.ff_max_nodes},   {"ff_hidden", h.ff_hidden},
      {"gnn_state_dim", h.gnn_state_dim}, {"gnn_hidden", h.gnn_hidden},
      {"gnn_max_iters", h.gnn_max_iters}, {"gnn_tol", h.gnn_tol},
      {"gnn_divergence", h.gnn_divergence}, {"conv_hidden", h.conv_hidden},
      {"mlp_hidden", h.mlp_hidden},       {"dropout_rate", h.dropout_rate},
      {"leaky_slope", h.leaky_slope}};
  j["loss_curve"] = params.loss_curve;
  nlohmann::json blocks = nlohmann::json::array();
  std::vector<BlockShape> shapes = block_shapes(params.variant, params.hyper);
  for (std::size_t i = 0; i < params.blocks.size(); ++i) {
    blocks.push_back({{"name", shapes[i].name},
                      {"rows", params.blocks[i].rows},
                      {"cols", params.blocks[i].cols},
                      {"data", params.blocks[i].v}});
  }
  j["blocks"] = std::move(blocks);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << j.dump() << "\n";
  if (!out) throw Error("failed writing file: " + path);
}

ModelParams load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid model file " + path + ": " + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "stp-model-v1")
      throw Error("unsupported model format tag");
    ModelParams p;
    p.variant = variant_from_name(j.at("variant").get<std::string>());
    p.feature_schema = j.at("feature_schema").get<std::string>();
    check_schema(p);
    p.init_seed = j.at("init_seed").get<std::uint64_t>();
    const nlohmann::json& h = j.at("hyper");
    p.hyper.ff_max_nodes = h.at("ff_max_nodes").get<int>();
    p.hyper.ff_hidden = h.at("ff_hidden").get<int>();
    p.hyper.gnn_state_dim = h.at("gnn_state_dim").get<int>();
    p.hyper.gnn_hidden = h.at("gnn_hidden").get<int>();
    p.hyper.gnn_max_iters = h.at("gnn_max_iters").get<int>();
    p.hyper.gnn_tol = h.at("gnn_tol").get<double>();
    p.hyper.gnn_divergence = h.at("gnn_divergence").get<double>();
    p.hyper.conv_hidden = h.at("conv_hidden").get<int>();
    p.hyper.mlp_hidden = h.at("mlp_hidden").get<int>();
    p.hyper.dropout_rate = h.at("dropout_rate").get<double>();
    p.hyper.leaky_slope = h.at("leaky_slope").get<double>();
    p.loss_curve = j.at("loss_curve").get<std::vector<double>>();

    std::vector<BlockShape> shapes = block_shapes(p.variant, p.hyper);
    const nlohmann::json& blocks = j.at("blocks");
    if (blocks.size() != shapes.size())
      throw Error("model has " + std::to_string(blocks.size()) +
                  " parameter blocks, expected " + std::to_string(shapes.size()));
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const nlohmann::json& b = blocks[i];
      if (b.at("name").get<std::string>() != shapes[i].name ||
          b.at("rows").get<int>() != shapes[i].rows ||
          b.at("cols").get<int>() != shapes[i].cols)
        throw Error("parameter block " + std::to_string(i) +
                    " does not match the expected layout");
      Mat m(shapes[i].rows, shapes[i].cols);
      m.v = b.at("data").get<std::vector<double>>();
      if (m.v.size() != static_cast<std::size_t>(shapes[i].rows) * shapes[i].cols)
        throw Error("parameter block " + std::to_string(i) + " has wrong size");
      for (double x : m.v)
        if (!std::isfinite(x))
          throw Error("parameter block " + std::to_string(i) +
                      " contains non-finite values");
      p.blocks.push_back(std::move(m));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid model file " + path + ": " + e.what());
  }
}

}  // namespace steiner
