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

#include "steiner/steinlib.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace steiner {
namespace {

constexpr const char* kMagic = "33d32945 stp file, version 1.0";
// Keeps every cost sum well below the kUnreachable sentinel.
constexpr std::int64_t kMaxTotalWeight = 2'000'000'000'000'000;

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Line {
  int number = 0;
  std::string raw;
  std::vector<std::string> tokens;
};

// Splits input into trimmed, tokenized lines; blank lines are dropped but
// line numbers are preserved for error reporting.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line;
    line.number = number;
    line.raw = raw;
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

// A decimal edge weight: digits with an optional fractional part, e.g.
// "7" or "2.5". Returns the digits as an integer plus the number of
// fractional digits.
struct DecimalWeight {
  std::int64_t digits = 0;
  int frac = 0;
};

DecimalWeight parse_weight(const std::string& tok, int line) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError(line, "bad edge weight '" + tok + "': " + why);
  };
  std::string intpart, fracpart;
  std::size_t dot = tok.find('.');
  if (dot == std::string::npos) {
    intpart = tok;
  } else {
    intpart = tok.substr(0, dot);
    fracpart = tok.substr(dot + 1);
    if (fracpart.empty()) throw fail("missing digits after decimal point");
  }
  if (intpart.empty()) throw fail("missing digits before decimal point");
  for (char c : intpart + fracpart)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw fail("expected a positive decimal number");
  if (fracpart.size() > 9) throw fail("more than 9 fractional digits");
  if (intpart.size() + fracpart.size() > 18) throw fail("value out of range");

  DecimalWeight w;
  for (char c : intpart + fracpart) w.digits = w.digits * 10 + (c - '0');
  w.frac = static_cast<int>(fracpart.size());
  if (w.digits == 0) throw fail("edge weights must be positive");
  return w;
}

std::int64_t pow10(int k) {
  std::int64_t p = 1;
  while (k-- > 0) p *= 10;
  return p;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
  if (tok.empty() || tok.size() > 9 ||
      !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw ParseError(line, "bad " + what + " '" + tok + "'");
  return std::stoi(tok);
}

struct RawEdge {
  int u, v;          // 0-based
  DecimalWeight w;
  int line;
};

}  // namespace

StpInstance parse_stp(const std::string& text,
                      std::vector<std::string>* warnings) {
  std::vector<Line> lines = tokenize(text);
  std::size_t pos = 0;
  auto peek = [&]() -> const Line* {
    return pos < lines.size() ? &lines[pos] : nullptr;
  };
  auto next = [&](const std::string& expectation) -> const Line& {
    if (pos >= lines.size()) {
      int last = lines.empty() ? 1 : lines.back().number;
      throw ParseError(last, "unexpected end of input: expected " + expectation);
    }
    return lines[pos++];
  };

  const Line& magic = next("STP header");
  std::string joined;
  for (const std::string& t : magic.tokens) {
    if (!joined.empty()) joined += ' ';
    joined += to_lower(t);
  }
  if (joined != kMagic)
    throw ParseError(magic.number,
                     "missing header '33D32945 STP File, Version 1.0'");

  bool saw_graph = false, saw_terminals = false, saw_eof = false;
  int graph_line = 0, terminals_line = 0;
  int n = 0;
  std::vector<RawEdge> raw_edges;
  std::vector<std::pair<int, int>> raw_terminals;  // (0-based id, line)
  std::string id;
  std::optional<std::uint64_t> seed;

  while (const Line* lp = peek()) {
    const Line& head = *lp;
    ++pos;
    std::string kw = to_lower(head.tokens[0]);
    if (kw == "eof") {
      saw_eof = true;
      break;
    }
    if (kw != "section")
      throw ParseError(head.number, "expected SECTION or EOF, got '" +
                                        head.tokens[0] + "'");
    if (head.tokens.size() < 2)
      throw ParseError(head.number, "SECTION needs a name");
    std::string name = to_lower(head.tokens[1]);

    if (name == "comment") {
      for (;;) {
        const Line& line = next("END of Comment section");
        std::string k = to_lower(line.tokens[0]);
        if (k == "end") break;
        if (k == "name") {
          // Remainder of the line, unquoted if quoted.
          std::size_t at = line.raw.find_first_not_of(" \t");
          at = line.raw.find_first_of(" \t", at);
          std::string rest =
              at == std::string::npos ? "" : line.raw.substr(at);
          std::size_t b = rest.find_first_not_of(" \t");
          std::size_t e = rest.find_last_not_of(" \t");
          rest = b == std::string::npos ? "" : rest.substr(b, e - b + 1);
          if (rest.size() >= 2 && rest.front() == '"' && rest.back() == '"')
            rest = rest.substr(1, rest.size() - 2);
          id = rest;
        } else if (k == "seed" && line.tokens.size() == 2 &&
                   std::all_of(line.tokens[1].begin(), line.tokens[1].end(),
                               [](unsigned char c) { return std::isdigit(c); }) &&
                   !line.tokens[1].empty() && line.tokens[1].size() <= 20) {
          errno = 0;
          char* endp = nullptr;
          std::uint64_t s = std::strtoull(line.tokens[1].c_str(), &endp, 10);
          if (errno == 0 && endp && *endp == '\0') seed = s;
        }
        // Other comment lines (Creator, Remark, ...) are free-form.
      }
    } else if (name == "graph") {
      if (saw_graph) throw ParseError(head.number, "duplicate Graph section");
      saw_graph = true;
      graph_line = head.number;
      const Line& nodes_line = next("Nodes count");
      if (to_lower(nodes_line.tokens[0]) != "nodes" || nodes_line.tokens.size() != 2)
        throw ParseError(nodes_line.number, "expected 'Nodes <n>'");
      n = parse_int(nodes_line.tokens[1], nodes_line.number, "node count");
      if (n < 1) throw ParseError(nodes_line.number, "need at least one node");
      const Line& edges_line = next("Edges count");
      if (to_lower(edges_line.tokens[0]) != "edges" || edges_line.tokens.size() != 2)
        throw ParseError(edges_line.number, "expected 'Edges <m>'");
      int m = parse_int(edges_line.tokens[1], edges_line.number, "edge count");

      std::set<std::pair<int, int>> seen;
      for (int i = 0; i < m; ++i) {
        const Line& e = next("edge line 'E <u> <v> <w>'");
        std::string k = to_lower(e.tokens[0]);
        if (k == "a")
          throw ParseError(e.number, "directed arcs ('A') are not supported");
        if (k != "e")
          throw ParseError(e.number,
                           "expected edge line 'E <u> <v> <w>' (edge " +
                               std::to_string(i + 1) + " of " +
                               std::to_string(m) + ")");
        if (e.tokens.size() != 4)
          throw ParseError(e.number, "edge line needs 'E <u> <v> <w>'");
        int u = parse_int(e.tokens[1], e.number, "node id");
        int v = parse_int(e.tokens[2], e.number, "node id");
        if (u < 1 || u > n || v < 1 || v > n)
          throw ParseError(e.number, "node id out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError(e.number, "self-loops are not allowed");
        DecimalWeight w = parse_weight(e.tokens[3], e.number);
        int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
        if (!seen.emplace(a, b).second)
          throw ParseError(e.number, "duplicate edge (" + std::to_string(u) +
                                         ", " + std::to_string(v) + ")");
        raw_edges.push_back({a, b, w, e.number});
      }
      const Line& end = next("END of Graph section");
      if (to_lower(end.tokens[0]) != "end")
        throw ParseError(end.number,
                         to_lower(end.tokens[0]) == "e"
                             ? "more edge lines than declared by 'Edges'"
                             : "expected END of Graph section");
    } else if (name == "terminals") {
      if (saw_terminals)
        throw ParseError(head.number, "duplicate Terminals section");
      saw_terminals = true;
      terminals_line = head.number;
      const Line& count_line = next("Terminals count");
      if (to_lower(count_line.tokens[0]) != "terminals" ||
          count_line.tokens.size() != 2)
        throw ParseError(count_line.number, "expected 'Terminals <t>'");
      int t = parse_int(count_line.tokens[1], count_line.number,
                        "terminal count");
      for (int i = 0; i < t; ++i) {
        const Line& tl = next("terminal line 'T <v>'");
        if (to_lower(tl.tokens[0]) != "t" || tl.tokens.size() != 2)
          throw ParseError(tl.number, "expected terminal line 'T <v>' (" +
                                          std::to_string(i + 1) + " of " +
                                          std::to_string(t) + ")");
        int v = parse_int(tl.tokens[1], tl.number, "terminal id");
        raw_terminals.emplace_back(v - 1, tl.number);
      }
      const Line& end = next("END of Terminals section");
      if (to_lower(end.tokens[0]) != "end")
        throw ParseError(end.number,
                         to_lower(end.tokens[0]) == "t"
                             ? "more terminal lines than declared"
                             : "expected END of Terminals section");
    } else {
      // Unknown section (Coordinates, MaximumDegrees, ...): skip to END.
      if (warnings)
        warnings->push_back("line " + std::to_string(head.number) +
                            ": skipping unknown section '" + head.tokens[1] +
                            "'");
      for (;;) {
        const Line& line = next("END of " + head.tokens[1] + " section");
        if (to_lower(line.tokens[0]) == "end") break;
      }
    }
  }

  int last_line = lines.empty() ? 1 : lines.back().number;
  if (!saw_eof) throw ParseError(last_line, "missing EOF marker");
  if (peek())
    throw ParseError(peek()->number, "content after EOF marker");
  if (!saw_graph) throw ParseError(last_line, "missing Graph section");
  if (!saw_terminals) throw ParseError(last_line, "missing Terminals section");

  // Terminal validation (ids may have been read before the Graph section).
  std::set<int> term_set;
  for (auto [v, line] : raw_terminals) {
    if (v < 0 || v >= n)
      throw ParseError(line, "terminal id out of range 1.." + std::to_string(n));
    if (!term_set.insert(v).second)
      throw ParseError(line, "duplicate terminal " + std::to_string(v + 1));
  }
  if (term_set.size() < 2)
    throw ParseError(terminals_line, "at least two terminals required");

  // Bring all weights to the common denominator 10^max_frac, then divide
  // out the gcd so equal instances always share one canonical scale.
  int max_frac = 0;
  for (const RawEdge& e : raw_edges) max_frac = std::max(max_frac, e.w.frac);
  std::int64_t denom = pow10(max_frac);
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  std::int64_t total = 0;
  for (const RawEdge& e : raw_edges) {
    __int128 scaled = static_cast<__int128>(e.w.digits) * pow10(max_frac - e.w.frac);
    if (scaled > kMaxTotalWeight)
      throw ParseError(e.line, "edge weight too large after scaling");
    edges.push_back({e.u, e.v, static_cast<std::int64_t>(scaled)});
    total += static_cast<std::int64_t>(scaled);
    if (total > kMaxTotalWeight)
      throw ParseError(e.line, "total edge weight exceeds supported range");
  }
  std::int64_t g = denom;
  for (const Edge& e : edges) g = std::gcd(g, e.w);
  if (g > 1) {
    denom /= g;
    for (Edge& e : edges) e.w /= g;
  }

  Graph graph(n, std::move(edges), denom);
  if (!is_connected(graph))
    throw ParseError(graph_line, "graph is not connected");

  std::vector<int> terminals(term_set.begin(), term_set.end());
  return StpInstance(std::move(graph), std::move(terminals), id, seed);
}

StpInstance load_stp_file(const std::string& path,
                          std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  StpInstance inst = parse_stp(buf.str(), warnings);
  if (inst.id().empty()) {
    std::string stem = std::filesystem::path(path).stem().string();
    return StpInstance(inst.graph(), inst.terminals(), stem, inst.seed());
  }
  return inst;
}

namespace {

// Minimal decimal rendering of w / denom. denom divides a power of ten
// (parser and generators guarantee this).
std::string format_weight(Cost w, Cost denom) {
  if (denom == 1) return std::to_string(w);
  int k = 0;
  std::int64_t p = 1;
  while (p % denom != 0) {
    if (++k > 18)
      throw Error("weight denominator " + std::to_string(denom) +
                  " is not representable as a decimal");
    p *= 10;
  }
  std::int64_t scaled = w * (p / denom);
  std::string frac = std::to_string(scaled % p);
  frac.insert(frac.begin(), k - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = std::to_string(scaled / p);
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace

std::string serialize_stp(const StpInstance& instance) {
  const Graph& g = instance.graph();
  if (instance.id().find('"') != std::string::npos ||
      instance.id().find('\n') != std::string::npos)
    throw Error("instance id cannot contain quotes or newlines");

  std::ostringstream out;
  out << "33D32945 STP File, Version 1.0\n";
  out << "SECTION Comment\n";
  out << "Name \"" << instance.id() << "\"\n";
  if (instance.seed()) out << "Seed " << *instance.seed() << "\n";
  out << "END\n\n";

  out << "SECTION Graph\n";
  out << "Nodes " << g.node_count() << "\n";
  out << "Edges " << g.edge_count() << "\n";
  for (const Edge& e : g.edges())
    out << "E " << (e.u + 1) << " " << (e.v + 1) << " "
        << format_weight(e.w, g.weight_denominator()) << "\n";
  out << "END\n\n";

  out << "SECTION Terminals\n";
  out << "Terminals " << instance.terminals().size() << "\n";
  for (int t : instance.terminals()) out << "T " << (t + 1) << "\n";
  out << "END\n\n";

  out << "EOF\n";
  return out.str();
}

void save_stp_file(const StpInstance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << serialize_stp(instance);
  if (!out) throw Error("failed writing file: " + path);
}

}  // namespace steiner
