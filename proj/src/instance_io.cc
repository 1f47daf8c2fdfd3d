// Copyright 2026 The edgecover Authors.
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

#include "edgecover/instance_io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "edgecover/error.h"

namespace edgecover {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::int64_t> ParseInts(std::string_view line, int line_no) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::int64_t value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw ParseError(line_no, "expected an integer, got '" +
                                    std::string(first, last) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Instance LoadInstance(std::string_view text) {
  std::map<std::string, std::string> params;
  std::int64_t n = -1, m = -1;
  std::vector<Weight> weights;
  bool have_weights = false;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = Trim(line.substr(1));
      if (!body.empty() && body.front() == '@') {
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(line_no, "parameter line needs 'key = value'");
        }
        const std::string key(Trim(body.substr(1, eq - 1)));
        if (key.empty()) throw ParseError(line_no, "empty parameter name");
        params[key] = std::string(Trim(body.substr(eq + 1)));
      }
      continue;
    }

    const auto ints = ParseInts(line, line_no);
    if (n < 0) {
      if (ints.size() != 2) throw ParseError(line_no, "header must be 'n m'");
      n = ints[0];
      m = ints[1];
      if (n < 1 || n > (std::int64_t{1} << 30)) {
        throw ParseError(line_no, "vertex count must be positive");
      }
      if (m < 0 || m > n * (n - 1) / 2) {
        throw ParseError(line_no, "edge count out of range for n");
      }
      continue;
    }
    if (!have_weights) {
      if (static_cast<std::int64_t>(ints.size()) != n) {
        throw ParseError(line_no, "expected " + std::to_string(n) +
                                      " weights, got " +
                                      std::to_string(ints.size()));
      }
      for (auto w : ints) {
        if (w < 0) throw ParseError(line_no, "negative vertex weight");
      }
      weights.assign(ints.begin(), ints.end());
      have_weights = true;
      continue;
    }
    if (static_cast<std::int64_t>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than the header declares");
    }
    if (ints.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    const auto u = ints[0], v = ints[1];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "edge endpoint out of range");
    }
    if (u == v) throw ParseError(line_no, "self-loop");
    if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (!seen.emplace(u, v).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }

  if (n < 0) throw ParseError(line_no, "missing header");
  if (!have_weights) throw ParseError(line_no, "missing weight line");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  }
  try {
    return Instance{Graph(static_cast<VertexId>(n), std::move(weights),
                          std::move(edges)),
                    std::move(params)};
  } catch (const OverflowError& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string SaveInstance(const Instance& instance) {
  const Graph& g = instance.graph;
  std::ostringstream out;
  for (const auto& [key, value] : instance.params) {
    out << "# @" << key << " = " << value << '\n';
  }
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v > 0) out << ' ';
    out << g.weight(v);
  }
  out << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Instance LoadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadInstance(buf.str());
}

void SaveInstanceFile(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write instance file '" + path + "'");
  out << SaveInstance(instance);
  if (!out) throw InputError("write failed for '" + path + "'");
}

}  // namespace edgecover
