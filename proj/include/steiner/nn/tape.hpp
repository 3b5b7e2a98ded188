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

#ifndef STEINER_NN_TAPE_HPP_
#define STEINER_NN_TAPE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Dense row-major matrix of doubles.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
  std::size_t size() const { return v.size(); }
};

// Compressed sparse row matrix; used for normalized adjacency operators.
// Tape spmm nodes keep a pointer to it, so it must outlive the tape.
struct SparseMat {
  int n = 0;
  std::vector<int> row_ptr;  // size n+1
  std::vector<int> col;
  std::vector<double> val;
};

// Computation graph for reverse-mode differentiation. Operations append
// nodes eagerly (values are computed immediately); backward() then walks
// the tape once in reverse. Only nodes reachable from gradient-requiring
// leaves carry gradient buffers.
class Tape {
 public:
  // Leaves. Parameters pass requires_grad = true.
  int leaf(Mat value, bool requires_grad = false);

  int matmul(int a, int b);
  int add(int a, int b);                 // same shape
  int add_row_broadcast(int a, int row); // row is 1 x cols, added to each row
  int relu(int a);
  int tanh_act(int a);
  int sigmoid(int a);
  int elu(int a);                        // alpha = 1
  int leaky_relu(int a, double slope);
  int concat_cols(const std::vector<int>& parts);
  // out[i, :] = in[rows[i], :]
  int gather_rows(int a, std::vector<int> rows);
  // out[seg[i], :] += in[i, :]; result has n_segments rows
  int segment_sum(int a, std::vector<int> seg, int n_segments);
  // Softmax over entries sharing a segment id; input must be a column.
  // Each segment is shifted by its maximum before exponentiation.
  int segment_softmax(int a, std::vector<int> seg, int n_segments);
  // out[i, :] = a[i, :] * s[i, 0]; s is a column.
  int scale_rows(int a, int s);
  // Sparse-dense product S * a. S must be symmetric (holds for the
  // normalized adjacency operators used here); backward reuses S directly.
  int spmm(const SparseMat* s, int a);
  // Inverted dropout with a fixed 0/1 keep mask (drawn by the caller so
  // training randomness stays in one place).
  int dropout(int a, std::vector<std::uint8_t> keep, double keep_prob);
  // Numerically stable mean of sigmoid cross-entropy over all entries of
  // `logits` against 0/1 targets. Produces a 1x1 node.
  int mean_bce_with_logits(int logits, std::vector<double> targets);

  const Mat& value(int id) const { return nodes_[id].value; }
  // Gradient buffer (zeros unless backward touched it). Only meaningful for
  // nodes with requires_grad.
  const Mat& grad(int id) const { return nodes_[id].grad; }
  bool requires_grad(int id) const { return nodes_[id].requires_grad; }

  // Seeds d(root)/d(root) = 1 (root must be 1x1) and accumulates gradients
  // into every gradient-requiring node.
  void backward(int root);

 private:
  struct Node {
    Mat value;
    Mat grad;
    bool requires_grad = false;
    std::function<void(Tape&)> back;  // empty for leaves
  };

  int push(Mat value, bool requires_grad, std::function<void(Tape&)> back);
  Mat& grad_buf(int id) { return nodes_[id].grad; }

  std::vector<Node> nodes_;
};

// Value-level helper shared by the tape and plain inference code.
Mat matmul_values(const Mat& a, const Mat& b);

}  // namespace steiner

#endif  // STEINER_NN_TAPE_HPP_
