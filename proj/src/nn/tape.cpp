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

#include "steiner/nn/tape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace steiner {

Mat matmul_values(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw Error("matmul shape mismatch");
  Mat c(a.rows, b.cols);
  // i-k-j order: the inner loop runs over contiguous rows of b and c,
  // which lets the compiler vectorize it.
  for (int i = 0; i < a.rows; ++i) {
    const double* arow = &a.v[static_cast<std::size_t>(i) * a.cols];
    double* crow = &c.v[static_cast<std::size_t>(i) * c.cols];
    for (int k = 0; k < a.cols; ++k) {
      const double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = &b.v[static_cast<std::size_t>(k) * b.cols];
      for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

int Tape::push(Mat value, bool requires_grad, std::function<void(Tape&)> back) {
  Node node;
  node.value = std::move(value);
  node.requires_grad = requires_grad;
  if (requires_grad) node.grad = Mat(node.value.rows, node.value.cols);
  node.back = std::move(back);
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int Tape::leaf(Mat value, bool requires_grad) {
  return push(std::move(value), requires_grad, nullptr);
}

int Tape::matmul(int a, int b) {
  Mat out = matmul_values(nodes_[a].value, nodes_[b].value);
  bool rg = nodes_[a].requires_grad || nodes_[b].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, b](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      const Mat& av = t.nodes_[a].value;
      const Mat& bv = t.nodes_[b].value;
      if (t.nodes_[a].requires_grad) {
        // dA[i,k] += sum_j G[i,j] * B[k,j] (dot of two contiguous rows)
        Mat& ga = t.grad_buf(a);
        for (int i = 0; i < av.rows; ++i) {
          const double* grow = &g.v[static_cast<std::size_t>(i) * g.cols];
          double* garow = &ga.v[static_cast<std::size_t>(i) * ga.cols];
          for (int k = 0; k < av.cols; ++k) {
            const double* brow = &bv.v[static_cast<std::size_t>(k) * bv.cols];
            double acc = 0.0;
            for (int j = 0; j < g.cols; ++j) acc += grow[j] * brow[j];
            garow[k] += acc;
          }
        }
      }
      if (t.nodes_[b].requires_grad) {
        // dB[k,j] += sum_i A[i,k] * G[i,j] (axpy onto contiguous rows)
        Mat& gb = t.grad_buf(b);
        for (int i = 0; i < av.rows; ++i) {
          const double* arow = &av.v[static_cast<std::size_t>(i) * av.cols];
          const double* grow = &g.v[static_cast<std::size_t>(i) * g.cols];
          for (int k = 0; k < av.cols; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            double* gbrow = &gb.v[static_cast<std::size_t>(k) * gb.cols];
            for (int j = 0; j < g.cols; ++j) gbrow[j] += aik * grow[j];
          }
        }
      }
    };
  return id;
}

int Tape::add(int a, int b) {
  const Mat& av = nodes_[a].value;
  const Mat& bv = nodes_[b].value;
  if (av.rows != bv.rows || av.cols != bv.cols)
    throw Error("add shape mismatch");
  Mat out = av;
  for (std::size_t i = 0; i < out.size(); ++i) out.v[i] += bv.v[i];
  bool rg = nodes_[a].requires_grad || nodes_[b].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, b](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      if (t.nodes_[a].requires_grad) {
        Mat& ga = t.grad_buf(a);
        for (std::size_t i = 0; i < g.size(); ++i) ga.v[i] += g.v[i];
      }
      if (t.nodes_[b].requires_grad) {
        Mat& gb = t.grad_buf(b);
        for (std::size_t i = 0; i < g.size(); ++i) gb.v[i] += g.v[i];
      }
    };
  return id;
}

int Tape::add_row_broadcast(int a, int row) {
  const Mat& av = nodes_[a].value;
  const Mat& rv = nodes_[row].value;
  if (rv.rows != 1 || rv.cols != av.cols)
    throw Error("row broadcast shape mismatch");
  Mat out = av;
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) out.at(i, j) += rv.at(0, j);
  bool rg = nodes_[a].requires_grad || nodes_[row].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, row](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      if (t.nodes_[a].requires_grad) {
        Mat& ga = t.grad_buf(a);
        for (std::size_t i = 0; i < g.size(); ++i) ga.v[i] += g.v[i];
      }
      if (t.nodes_[row].requires_grad) {
        Mat& gr = t.grad_buf(row);
        for (int i = 0; i < g.rows; ++i)
          for (int j = 0; j < g.cols; ++j) gr.at(0, j) += g.at(i, j);
      }
    };
  return id;
}

namespace {

template <typename Fwd>
Mat map_values(const Mat& in, Fwd f) {
  Mat out(in.rows, in.cols);
  for (std::size_t i = 0; i < in.size(); ++i) out.v[i] = f(in.v[i]);
  return out;
}

}  // namespace

int Tape::relu(int a) {
  Mat out = map_values(nodes_[a].value, [](double x) { return x > 0.0 ? x : 0.0; });
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      const Mat& x = t.nodes_[a].value;
      Mat& ga = t.grad_buf(a);
      for (std::size_t i = 0; i < g.size(); ++i)
        if (x.v[i] > 0.0) ga.v[i] += g.v[i];
    };
  return id;
}

int Tape::tanh_act(int a) {
  Mat out = map_values(nodes_[a].value, [](double x) { return std::tanh(x); });
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      const Mat& y = t.nodes_[id].value;
      Mat& ga = t.grad_buf(a);
      for (std::size_t i = 0; i < g.size(); ++i)
        ga.v[i] += g.v[i] * (1.0 - y.v[i] * y.v[i]);
    };
  return id;
}

int Tape::sigmoid(int a) {
  Mat out = map_values(nodes_[a].value, [](double x) {
    return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x))
                    : std::exp(x) / (1.0 + std::exp(x));
  });
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      const Mat& y = t.nodes_[id].value;
      Mat& ga = t.grad_buf(a);
      for (std::size_t i = 0; i < g.size(); ++i)
        ga.v[i] += g.v[i] * y.v[i] * (1.0 - y.v[i]);
    };
  return id;
}

int Tape::elu(int a) {
  Mat out = map_values(nodes_[a].value,
                       [](double x) { return x > 0.0 ? x : std::expm1(x); });
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      const Mat& x = t.nodes_[a].value;
      const Mat& y = t.nodes_[id].value;
      Mat& ga = t.grad_buf(a);
      for (std::size_t i = 0; i < g.size(); ++i)
        ga.v[i] += g.v[i] * (x.v[i] > 0.0 ? 1.0 : y.v[i] + 1.0);
    };
  return id;
}

int Tape::leaky_relu(int a, double slope) {
  Mat out = map_values(nodes_[a].value,
                       [slope](double x) { return x > 0.0 ? x : slope * x; });
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, slope](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      const Mat& x = t.nodes_[a].value;
      Mat& ga = t.grad_buf(a);
      for (std::size_t i = 0; i < g.size(); ++i)
        ga.v[i] += g.v[i] * (x.v[i] > 0.0 ? 1.0 : slope);
    };
  return id;
}

int Tape::concat_cols(const std::vector<int>& parts) {
  if (parts.empty()) throw Error("concat needs at least one input");
  int rows = nodes_[parts[0]].value.rows;
  int cols = 0;
  bool rg = false;
  for (int p : parts) {
    if (nodes_[p].value.rows != rows) throw Error("concat row mismatch");
    cols += nodes_[p].value.cols;
    rg = rg || nodes_[p].requires_grad;
  }
  Mat out(rows, cols);
  int off = 0;
  for (int p : parts) {
    const Mat& pv = nodes_[p].value;
    for (int i = 0; i < rows; ++i)
      std::copy_n(&pv.v[static_cast<std::size_t>(i) * pv.cols], pv.cols,
                  &out.v[static_cast<std::size_t>(i) * cols + off]);
    off += pv.cols;
  }
  int id = push(std::move(out), rg, nullptr);
  if (rg) {
    std::vector<int> parts_copy = parts;
    nodes_[id].back = [id, parts_copy](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      int off = 0;
      for (int p : parts_copy) {
        const int pc = t.nodes_[p].value.cols;
        if (t.nodes_[p].requires_grad) {
          Mat& gp = t.grad_buf(p);
          for (int i = 0; i < g.rows; ++i)
            for (int j = 0; j < pc; ++j)
              gp.at(i, j) += g.at(i, off + j);
        }
        off += pc;
      }
    };
  }
  return id;
}

int Tape::gather_rows(int a, std::vector<int> rows) {
  const Mat& av = nodes_[a].value;
  Mat out(static_cast<int>(rows.size()), av.cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= av.rows) throw Error("gather row out of range");
    std::copy_n(&av.v[static_cast<std::size_t>(rows[i]) * av.cols], av.cols,
                &out.v[i * av.cols]);
  }
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, rows = std::move(rows)](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      Mat& ga = t.grad_buf(a);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < g.cols; ++j)
          ga.at(rows[i], j) += g.at(static_cast<int>(i), j);
    };
  return id;
}

int Tape::segment_sum(int a, std::vector<int> seg, int n_segments) {
  const Mat& av = nodes_[a].value;
  if (static_cast<int>(seg.size()) != av.rows)
    throw Error("segment id count must match row count");
  Mat out(n_segments, av.cols);
  for (int i = 0; i < av.rows; ++i) {
    if (seg[i] < 0 || seg[i] >= n_segments) throw Error("segment id out of range");
    for (int j = 0; j < av.cols; ++j) out.at(seg[i], j) += av.at(i, j);
  }
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, seg = std::move(seg)](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      Mat& ga = t.grad_buf(a);
      for (int i = 0; i < ga.rows; ++i)
        for (int j = 0; j < g.cols; ++j) ga.at(i, j) += g.at(seg[i], j);
    };
  return id;
}

int Tape::segment_softmax(int a, std::vector<int> seg, int n_segments) {
  const Mat& av = nodes_[a].value;
  if (av.cols != 1) throw Error("segment softmax expects a column vector");
  if (static_cast<int>(seg.size()) != av.rows)
    throw Error("segment id count must match row count");

  std::vector<double> seg_max(n_segments, -std::numeric_limits<double>::infinity());
  for (int i = 0; i < av.rows; ++i) {
    if (seg[i] < 0 || seg[i] >= n_segments) throw Error("segment id out of range");
    seg_max[seg[i]] = std::max(seg_max[seg[i]], av.v[i]);
  }
  std::vector<double> seg_sum(n_segments, 0.0);
  Mat out(av.rows, 1);
  for (int i = 0; i < av.rows; ++i) {
    out.v[i] = std::exp(av.v[i] - seg_max[seg[i]]);
    seg_sum[seg[i]] += out.v[i];
  }
  for (int i = 0; i < av.rows; ++i) out.v[i] /= seg_sum[seg[i]];

  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, seg = std::move(seg), n_segments](Tape& t) {
      // d/dx_i = y_i * (g_i - sum_{j in segment} g_j y_j)
      const Mat& g = t.nodes_[id].grad;
      const Mat& y = t.nodes_[id].value;
      Mat& ga = t.grad_buf(a);
      std::vector<double> seg_dot(n_segments, 0.0);
      for (int i = 0; i < y.rows; ++i) seg_dot[seg[i]] += g.v[i] * y.v[i];
      for (int i = 0; i < y.rows; ++i)
        ga.v[i] += y.v[i] * (g.v[i] - seg_dot[seg[i]]);
    };
  return id;
}

int Tape::scale_rows(int a, int s) {
  const Mat& av = nodes_[a].value;
  const Mat& sv = nodes_[s].value;
  if (sv.cols != 1 || sv.rows != av.rows)
    throw Error("row scale expects a matching column vector");
  Mat out = av;
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) out.at(i, j) *= sv.v[i];
  bool rg = nodes_[a].requires_grad || nodes_[s].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, s](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      const Mat& av2 = t.nodes_[a].value;
      const Mat& sv2 = t.nodes_[s].value;
      if (t.nodes_[a].requires_grad) {
        Mat& ga = t.grad_buf(a);
        for (int i = 0; i < g.rows; ++i)
          for (int j = 0; j < g.cols; ++j) ga.at(i, j) += g.at(i, j) * sv2.v[i];
      }
      if (t.nodes_[s].requires_grad) {
        Mat& gs = t.grad_buf(s);
        for (int i = 0; i < g.rows; ++i) {
          double acc = 0.0;
          for (int j = 0; j < g.cols; ++j) acc += g.at(i, j) * av2.at(i, j);
          gs.v[i] += acc;
        }
      }
    };
  return id;
}

namespace {

Mat spmm_values(const SparseMat& s, const Mat& x) {
  if (s.n != x.rows) throw Error("spmm shape mismatch");
  Mat out(s.n, x.cols);
  for (int i = 0; i < s.n; ++i) {
    double* orow = &out.v[static_cast<std::size_t>(i) * out.cols];
    for (int e = s.row_ptr[i]; e < s.row_ptr[i + 1]; ++e) {
      const double sv = s.val[e];
      const double* xrow = &x.v[static_cast<std::size_t>(s.col[e]) * x.cols];
      for (int j = 0; j < x.cols; ++j) orow[j] += sv * xrow[j];
    }
  }
  return out;
}

}  // namespace

int Tape::spmm(const SparseMat* s, int a) {
  Mat out = spmm_values(*s, nodes_[a].value);
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, s](Tape& t) {
      // S symmetric, so dX += S^T G = S G.
      Mat gx = spmm_values(*s, t.nodes_[id].grad);
      Mat& ga = t.grad_buf(a);
      for (std::size_t i = 0; i < gx.size(); ++i) ga.v[i] += gx.v[i];
    };
  return id;
}

int Tape::dropout(int a, std::vector<std::uint8_t> keep, double keep_prob) {
  const Mat& av = nodes_[a].value;
  if (keep.size() != av.size()) throw Error("dropout mask size mismatch");
  if (keep_prob <= 0.0 || keep_prob > 1.0)
    throw Error("dropout keep probability must be in (0, 1]");
  Mat out(av.rows, av.cols);
  const double inv = 1.0 / keep_prob;
  for (std::size_t i = 0; i < av.size(); ++i)
    out.v[i] = keep[i] ? av.v[i] * inv : 0.0;
  bool rg = nodes_[a].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, a, keep = std::move(keep), inv](Tape& t) {
      const Mat& g = t.nodes_[id].grad;
      Mat& ga = t.grad_buf(a);
      for (std::size_t i = 0; i < g.size(); ++i)
        if (keep[i]) ga.v[i] += g.v[i] * inv;
    };
  return id;
}

int Tape::mean_bce_with_logits(int logits, std::vector<double> targets) {
  const Mat& z = nodes_[logits].value;
  if (targets.size() != z.size())
    throw Error("loss target count must match logit count");
  // loss_i = max(z,0) - z*y + log(1 + exp(-|z|))
  double total = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double zi = z.v[i];
    total += std::max(zi, 0.0) - zi * targets[i] + std::log1p(std::exp(-std::abs(zi)));
  }
  Mat out(1, 1);
  const double scale = 1.0 / static_cast<double>(z.size());
  out.v[0] = total * scale;
  bool rg = nodes_[logits].requires_grad;
  int id = push(std::move(out), rg, nullptr);
  if (rg)
    nodes_[id].back = [id, logits, targets = std::move(targets), scale](Tape& t) {
      const double g = t.nodes_[id].grad.v[0];
      const Mat& z2 = t.nodes_[logits].value;
      Mat& gz = t.grad_buf(logits);
      for (std::size_t i = 0; i < z2.size(); ++i) {
        double zi = z2.v[i];
        double sig = zi >= 0.0 ? 1.0 / (1.0 + std::exp(-zi))
                               : std::exp(zi) / (1.0 + std::exp(zi));
        gz.v[i] += g * scale * (sig - targets[i]);
      }
    };
  return id;
}

void Tape::backward(int root) {
  Node& r = nodes_[root];
  if (!r.requires_grad)
    throw Error("backward root does not depend on any parameter");
  if (r.value.rows != 1 || r.value.cols != 1)
    throw Error("backward root must be a scalar");
  for (Node& n : nodes_)
    if (n.requires_grad) std::fill(n.grad.v.begin(), n.grad.v.end(), 0.0);
  r.grad.v[0] = 1.0;
  for (int id = root; id >= 0; --id)
    if (nodes_[id].requires_grad && nodes_[id].back) nodes_[id].back(*this);
}

}  // namespace steiner
