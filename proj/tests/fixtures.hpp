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

#ifndef STEINER_TESTS_FIXTURES_HPP_
#define STEINER_TESTS_FIXTURES_HPP_

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner::test {

// K4 worked example: triangle 0-1-2 with weight-5 edges, hub node 3 joined
// to each corner with weight-3 edges, terminals {0, 1, 2}. The optimal tree
// is the three spokes (cost 9); the closure-MST heuristic picks two triangle
// edges (cost 10); every terminal pair is at distance 5 and the hub is at
// distance 3 from each terminal.
inline StpInstance make_gstar() {
  std::vector<Edge> edges = {{0, 1, 5}, {0, 2, 5}, {1, 2, 5},
                             {0, 3, 3}, {1, 3, 3}, {2, 3, 3}};
  return StpInstance(Graph(4, std::move(edges)), {0, 1, 2}, "gstar");
}

// Fresh empty scratch directory under the system temp dir.
inline std::string scratch_dir(const std::string& tag) {
  namespace fs = std::filesystem;
  static int counter = 0;
  auto ticks = std::chrono::steady_clock::now().time_since_epoch().count();
  fs::path p = fs::temp_directory_path() /
               ("steiner_test_" + tag + "_" + std::to_string(++counter) + "_" +
                std::to_string(static_cast<unsigned long long>(ticks)));
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

}  // namespace steiner::test

#endif  // STEINER_TESTS_FIXTURES_HPP_
