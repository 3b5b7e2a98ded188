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

#ifndef STEINER_MODELS_HPP_
#define STEINER_MODELS_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "steiner/dataset.hpp"
#include "steiner/features.hpp"
#include "steiner/graph.hpp"
#include "steiner/nn/tape.hpp"
#include "steiner/rng.hpp"

namespace steiner {

// Node-scoring model variants. All four consume an instance and emit one
// inclusion probability per node; they differ in how much graph structure
// they exploit:
//   FF  - feedforward net over a flattened adjacency + terminal indicator,
//         fixed maximum graph size.
//   GNN - iterative neighborhood diffusion to a fixed point, then a readout
//         network per node.
//   GCN - two spectral convolution layers (symmetric-normalized adjacency
//         with self-loops) followed by an MLP head.
//   GAT - two attention-weighted aggregation layers followed by the same
//         MLP head.
enum class ModelVariant { FF, GNN, GCN, GAT };

std::string variant_name(ModelVariant v);
ModelVariant variant_from_name(const std::string& name);

struct ModelHyperparams {
  // FF: largest supported node count and hidden width.
  int ff_max_nodes = 60;
  int ff_hidden = 100;
  // GNN: state dimension, hidden width of the two internal MLPs, iteration
  // cap, convergence tolerance and divergence guard for the diffusion.
  int gnn_state_dim = 5;
  int gnn_hidden = 40;
  int gnn_max_iters = 50;
  double gnn_tol = 1e-4;
  double gnn_divergence = 1e6;
  // GCN / GAT convolution width and shared MLP-head width.
  int conv_hidden = 128;
  int mlp_hidden = 128;
  double dropout_rate = 0.5;
  double leaky_slope = 0.2;  // attention-score nonlinearity
};

struct ModelParams {
  ModelVariant variant = ModelVariant::GCN;
  ModelHyperparams hyper;
  std::string feature_schema = kFeatureSchemaVersion;
  std::uint64_t init_seed = 0;
  std::vector<Mat> blocks;  // order and shapes fixed by block_shapes()
  std::vector<double> loss_curve;  // per-epoch mean training loss
};

struct BlockShape {
  std::string name;
  int rows = 0;
  int cols = 0;
  bool bias = false;  // biases start at zero; other blocks get random init
};

// Parameter block layout for a variant; serialization and the optimizer
// both follow this order.
std::vector<BlockShape> block_shapes(ModelVariant v, const ModelHyperparams& h);

// Fresh parameters: weight matrices get uniform draws in
// +-sqrt(6 / (fan_in + fan_out)), biases start at zero. The same seed
// always yields the same parameters.
ModelParams init_model(ModelVariant v, const ModelHyperparams& h,
                       std::uint64_t seed);

// Symmetric-normalized adjacency with self-loops,
// D^(-1/2) (A + I) D^(-1/2), as a CSR operator.
SparseMat normalized_adjacency(const Graph& g);

// Per-node inclusion scores in [0, 1], in node-id order. Throws when the
// model's feature schema does not match this build or (FF) the instance
// exceeds ff_max_nodes.
std::vector<double> predict_scores(const ModelParams& params,
                                   const StpInstance& instance);

// One forward (and optional backward) pass on a single labeled instance.
// `dropout_rng` enables dropout with freshly drawn masks (training);
// leave null for deterministic evaluation. `gnn_fixed_iters`, when >= 0,
// pins the diffusion iteration count (used by the finite-difference
// gradient tests, which need the same unrolling on every probe).
struct LossEval {
  double loss = 0.0;
  int gnn_iterations = 0;
  std::vector<Mat> gradients;  // per block; empty unless requested
};
LossEval evaluate_loss(const ModelParams& params, const StpInstance& instance,
                       const std::vector<int>& labels, bool with_gradients,
                       Rng* dropout_rng = nullptr, int gnn_fixed_iters = -1);

struct TrainConfig {
  int epochs = 500;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::uint64_t seed = 0;
  bool use_dropout = true;
};

// Full-batch-per-instance Adam training over the labeled train-split
// entries of `dataset`: each epoch visits every instance once in a
// seed-shuffled order and applies one update per instance. Runs
// single-threaded; identical inputs give identical parameters. Throws when
// no labeled training instances exist or the loss becomes non-finite.
ModelParams train_model(ModelVariant v, const Dataset& dataset,
                        const TrainConfig& config,
                        const ModelHyperparams& hyper = ModelHyperparams());

// JSON (de)serialization. Loading validates the format tag, variant,
// feature schema, block shapes and value finiteness.
void save_model(const ModelParams& params, const std::string& path);
ModelParams load_model(const std::string& path);

}  // namespace steiner

#endif  // STEINER_MODELS_HPP_
