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

#include <cmath>
#include <functional>
#include <vector>

#include "steiner/nn/tape.hpp"
#include "steiner/rng.hpp"

using namespace steiner;

namespace {

// Builds a 1x1 loss node from gradient-requiring leaves.
using Builder = std::function<int(Tape&, const std::vector<int>&)>;

double loss_at(const Builder& build, const std::vector<Mat>& leaves,
               std::vector<Mat>* grads) {
  Tape t;
  std::vector<int> ids;
  ids.reserve(leaves.size());
  for (const Mat& m : leaves) ids.push_back(t.leaf(m, true));
  int root = build(t, ids);
  double value = t.value(root).v[0];
  if (grads) {
    t.backward(root);
    grads->clear();
    for (int id : ids) grads->push_back(t.grad(id));
  }
  return value;
}

// Central finite differences against the analytic gradient for every entry
// of every leaf.
void check_gradients(const Builder& build, std::vector<Mat> leaves) {
  std::vector<Mat> grads;
  loss_at(build, leaves, &grads);
  const double h = 1e-5;
  for (std::size_t b = 0; b < leaves.size(); ++b) {
    for (std::size_t i = 0; i < leaves[b].size(); ++i) {
      const double orig = leaves[b].v[i];
      leaves[b].v[i] = orig + h;
      const double up = loss_at(build, leaves, nullptr);
      leaves[b].v[i] = orig - h;
      const double down = loss_at(build, leaves, nullptr);
      leaves[b].v[i] = orig;
      const double fd = (up - down) / (2.0 * h);
      const double an = grads[b].v[i];
      const double tol = 1e-7 + 1e-4 * std::max(std::abs(fd), std::abs(an));
      CHECK_MESSAGE(std::abs(fd - an) <= tol,
                    "leaf " << b << " entry " << i << ": fd=" << fd
                            << " analytic=" << an);
    }
  }
}

// Deterministic values bounded away from the relu/leaky kinks at 0.
Mat random_mat(int rows, int cols, Rng& rng) {
  Mat m(rows, cols);
  for (double& x : m.v) {
    double r = 2.0 * rng.real() - 1.0;
    x = (r < 0 ? -1.0 : 1.0) * (0.05 + 0.9 * std::abs(r));
  }
  return m;
}

std::vector<double> random_targets(std::size_t n, Rng& rng) {
  std::vector<double> t(n);
  for (double& x : t) x = rng.real() < 0.5 ? 0.0 : 1.0;
  return t;
}

}  // namespace

TEST_CASE("matmul values") {
  Mat a(2, 3), b(3, 2);
  a.v = {1, 2, 3, 4, 5, 6};
  b.v = {7, 8, 9, 10, 11, 12};
  Mat c = matmul_values(a, b);
  REQUIRE(c.rows == 2);
  REQUIRE(c.cols == 2);
  CHECK(c.at(0, 0) == doctest::Approx(58));
  CHECK(c.at(0, 1) == doctest::Approx(64));
  CHECK(c.at(1, 0) == doctest::Approx(139));
  CHECK(c.at(1, 1) == doctest::Approx(154));
}

TEST_CASE("cross-entropy value matches the stable closed form") {
  Tape t;
  Mat z(1, 3);
  z.v = {0.0, 500.0, -500.0};
  int logits = t.leaf(z);
  int loss = t.mean_bce_with_logits(logits, {1.0, 1.0, 1.0});
  // Entries: log(2), ~0, ~500 (saturated logit against target 1).
  double expect = (std::log(2.0) + 0.0 + 500.0) / 3.0;
  CHECK(t.value(loss).v[0] == doctest::Approx(expect));
  CHECK(std::isfinite(t.value(loss).v[0]));
}

TEST_CASE("segment softmax normalizes within each segment") {
  Tape t;
  Mat a(5, 1);
  a.v = {2.0, -1.0, 0.5, 300.0, 299.0};  // second segment is max-shifted
  int id = t.segment_softmax(t.leaf(a), {0, 0, 1, 1, 1}, 2);
  const Mat& out = t.value(id);
  CHECK(out.v[0] + out.v[1] == doctest::Approx(1.0));
  CHECK(out.v[2] + out.v[3] + out.v[4] == doctest::Approx(1.0));
  CHECK(out.v[0] > out.v[1]);
  CHECK(std::isfinite(out.v[3]));
}

TEST_CASE("dropout applies an inverted fixed mask") {
  Tape t;
  Mat a(2, 2);
  a.v = {1.0, 2.0, 3.0, 4.0};
  int id = t.dropout(t.leaf(a), {1, 0, 0, 1}, 0.5);
  const Mat& out = t.value(id);
  CHECK(out.v[0] == doctest::Approx(2.0));  // kept, scaled by 1/0.5
  CHECK(out.v[1] == 0.0);
  CHECK(out.v[2] == 0.0);
  CHECK(out.v[3] == doctest::Approx(8.0));
}

TEST_CASE("sparse product matches the dense equivalent") {
  SparseMat s;
  s.n = 3;
  s.row_ptr = {0, 2, 5, 7};
  s.col = {0, 1, 0, 1, 2, 1, 2};
  s.val = {1.0, 0.5, 0.5, 2.0, 0.25, 0.25, 1.0};

  Mat x(3, 2);
  x.v = {1, 2, 3, 4, 5, 6};
  Tape t;
  int id = t.spmm(&s, t.leaf(x));
  const Mat& out = t.value(id);
  CHECK(out.at(0, 0) == doctest::Approx(1 * 1 + 0.5 * 3));
  CHECK(out.at(1, 1) == doctest::Approx(0.5 * 2 + 2 * 4 + 0.25 * 6));
  CHECK(out.at(2, 0) == doctest::Approx(0.25 * 3 + 1 * 5));
}

TEST_CASE("gradients: linear algebra ops") {
  Rng rng(1);
  Mat a = random_mat(2, 3, rng), b = random_mat(3, 2, rng),
      c = random_mat(2, 2, rng), row = random_mat(1, 2, rng);
  auto targets = random_targets(4, rng);

  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int prod = t.matmul(ids[0], ids[1]);
        int sum = t.add(prod, ids[2]);
        int shifted = t.add_row_broadcast(sum, ids[3]);
        return t.mean_bce_with_logits(shifted, targets);
      },
      {a, b, c, row});
}

TEST_CASE("gradients: activations") {
  Rng rng(2);
  Mat a = random_mat(3, 3, rng), b = random_mat(3, 2, rng);
  auto targets = random_targets(6, rng);

  for (int which = 0; which < 5; ++which) {
    check_gradients(
        [&, which](Tape& t, const std::vector<int>& ids) {
          int z = t.matmul(ids[0], ids[1]);
          int act = 0;
          switch (which) {
            case 0: act = t.relu(z); break;
            case 1: act = t.tanh_act(z); break;
            case 2: act = t.sigmoid(z); break;
            case 3: act = t.elu(z); break;
            default: act = t.leaky_relu(z, 0.2); break;
          }
          return t.mean_bce_with_logits(act, targets);
        },
        {a, b});
  }
}

TEST_CASE("gradients: concat, gather and segments") {
  Rng rng(3);
  Mat a = random_mat(4, 2, rng), b = random_mat(4, 3, rng);
  auto cat_targets = random_targets(20, rng);
  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int cat = t.concat_cols({ids[0], ids[1]});
        return t.mean_bce_with_logits(cat, cat_targets);
      },
      {a, b});

  // A repeated gather row must accumulate both contributions.
  auto gather_targets = random_targets(8, rng);
  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int picked = t.gather_rows(ids[0], {2, 0, 1, 1});
        return t.mean_bce_with_logits(picked, gather_targets);
      },
      {a});

  auto seg_targets = random_targets(6, rng);
  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int summed = t.segment_sum(ids[0], {0, 1, 0, 2}, 3);
        return t.mean_bce_with_logits(summed, seg_targets);
      },
      {a});

  Mat col = random_mat(5, 1, rng);
  auto soft_targets = random_targets(5, rng);
  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int soft = t.segment_softmax(ids[0], {0, 0, 1, 1, 1}, 2);
        return t.mean_bce_with_logits(soft, soft_targets);
      },
      {col});
}

TEST_CASE("gradients: row scaling, sparse product and dropout") {
  Rng rng(4);
  Mat a = random_mat(3, 2, rng), s = random_mat(3, 1, rng);
  auto targets = random_targets(6, rng);
  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int scaled = t.scale_rows(ids[0], ids[1]);
        return t.mean_bce_with_logits(scaled, targets);
      },
      {a, s});

  SparseMat sp;
  sp.n = 3;
  sp.row_ptr = {0, 2, 5, 7};
  sp.col = {0, 1, 0, 1, 2, 1, 2};
  sp.val = {1.0, 0.5, 0.5, 2.0, 0.25, 0.25, 1.0};
  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int mixed = t.spmm(&sp, ids[0]);
        return t.mean_bce_with_logits(mixed, targets);
      },
      {a});

  std::vector<std::uint8_t> keep = {1, 0, 1, 1, 0, 1};
  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int dropped = t.dropout(ids[0], keep, 0.75);
        return t.mean_bce_with_logits(dropped, targets);
      },
      {a});
}

TEST_CASE("gradients: two-layer composite") {
  Rng rng(5);
  Mat x = random_mat(4, 3, rng), w0 = random_mat(3, 5, rng),
      b0 = random_mat(1, 5, rng), w1 = random_mat(5, 1, rng),
      b1 = random_mat(1, 1, rng);
  auto targets = random_targets(4, rng);
  check_gradients(
      [&](Tape& t, const std::vector<int>& ids) {
        int h = t.relu(t.add_row_broadcast(t.matmul(ids[0], ids[1]), ids[2]));
        int z = t.add_row_broadcast(t.matmul(h, ids[3]), ids[4]);
        return t.mean_bce_with_logits(z, targets);
      },
      {x, w0, b0, w1, b1});
}

TEST_CASE("backward can run twice with identical results") {
  Rng rng(6);
  Mat a = random_mat(2, 2, rng);
  Tape t;
  int leaf = t.leaf(a, true);
  int loss = t.mean_bce_with_logits(t.tanh_act(leaf), {1, 0, 0, 1});
  t.backward(loss);
  Mat first = t.grad(leaf);
  t.backward(loss);
  const Mat& second = t.grad(leaf);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i)
    CHECK(first.v[i] == doctest::Approx(second.v[i]));
}

TEST_CASE("gradient tracking propagates only from marked leaves") {
  Tape t;
  Mat a(2, 2);
  a.v = {1, 2, 3, 4};
  int frozen = t.leaf(a);
  int live = t.leaf(a, true);
  CHECK_FALSE(t.requires_grad(t.relu(frozen)));
  CHECK(t.requires_grad(t.add(frozen, live)));
}
