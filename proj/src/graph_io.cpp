// Copyright 2026 The pathpack Authors
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

#include "pathpack/graph_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pathpack/error.hpp"

namespace pathpack {

namespace {

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::parse_error,
              "line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_index(std::istringstream& iss, std::size_t line_no,
                        std::size_t n) {
  long long value = 0;
  if (!(iss >> value)) fail_at(line_no, "expected vertex index");
  if (value < 1 || static_cast<std::size_t>(value) > n) {
    fail_at(line_no, "vertex index " + std::to_string(value) +
                         " outside 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(value - 1);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  bool any_label = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "p") {
      if (n) fail_at(line_no, "duplicate header");
      long long nv = -1, ne = -1;
      if (!(iss >> nv >> ne) || nv < 0 || ne < 0) {
        fail_at(line_no, "malformed header, expected 'p <n> <m>'");
      }
      n = static_cast<std::size_t>(nv);
      declared_edges = static_cast<std::size_t>(ne);
      labels.assign(*n, "");
    } else if (tag == "e") {
      if (!n) fail_at(line_no, "edge before header");
      std::size_t u = parse_index(iss, line_no, *n);
      std::size_t v = parse_index(iss, line_no, *n);
      if (u == v) {
        throw Error(ErrorKind::validation_error,
                    "line " + std::to_string(line_no) + ": self-loop at vertex " +
                        std::to_string(u + 1));
      }
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    } else if (tag == "l") {
      if (!n) fail_at(line_no, "label before header");
      std::size_t v = parse_index(iss, line_no, *n);
      std::string value;
      if (!(iss >> value)) fail_at(line_no, "missing label text");
      labels[v] = value;
      any_label = true;
    } else {
      fail_at(line_no, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (tag != "p" && (iss >> extra)) {
      fail_at(line_no, "trailing token '" + extra + "'");
    }
  }
  if (!n) throw Error(ErrorKind::parse_error, "missing 'p' header");
  if (edges.size() != declared_edges) {
    throw Error(ErrorKind::parse_error,
                "header declares " + std::to_string(declared_edges) +
                    " edges, found " + std::to_string(edges.size()));
  }
  if (!any_label) labels.clear();
  return Graph(*n, std::move(edges), std::move(labels));
}

void format_graph(const Graph& g, std::ostream& out) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!g.label(v).empty()) out << "l " << v + 1 << ' ' << g.label(v) << '\n';
    }
  }
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open " + path.string());
  return parse_graph(in);
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path.string());
  format_graph(g, out);
  if (!out) throw Error(ErrorKind::io_error, "write failed: " + path.string());
}

}  // namespace pathpack
