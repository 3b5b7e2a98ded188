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

#ifndef STEINER_STEINLIB_HPP_
#define STEINER_STEINLIB_HPP_

#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Parse failure with the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Reads the classic STP text format ("33D32945 STP File, Version 1.0"):
// SECTION Comment / Graph / Terminals blocks terminated by END, then EOF.
// Keywords are case-insensitive and node ids are 1-based in the file,
// 0-based in memory. Decimal edge weights are scaled to a common integer
// denominator. Unknown sections are skipped; their names are appended to
// `warnings` when provided. Malformed input raises ParseError.
StpInstance parse_stp(const std::string& text,
                      std::vector<std::string>* warnings = nullptr);

// parse_stp on a file's contents. When the Comment section carries no Name,
// the file stem becomes the instance id.
StpInstance load_stp_file(const std::string& path,
                          std::vector<std::string>* warnings = nullptr);

// Canonical text form: sections in fixed order, edges sorted by endpoints,
// terminals ascending, weights printed as minimal decimals. Serializing the
// same instance twice yields byte-identical output, and
// parse_stp(serialize_stp(x)) reproduces x including id and seed.
std::string serialize_stp(const StpInstance& instance);

void save_stp_file(const StpInstance& instance, const std::string& path);

}  // namespace steiner

#endif  // STEINER_STEINLIB_HPP_
