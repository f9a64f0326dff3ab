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

#include "pathpack/graph.hpp"

#include <algorithm>
#include <queue>

#include "pathpack/error.hpp"

namespace pathpack {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_overlap: return "invalid-overlap";
    case ErrorKind::disconnected_graph: return "disconnected-graph";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::validation_error: return "validation-error";
    case ErrorKind::not_a_tree: return "not-a-tree";
    case ErrorKind::non_canonical_spec: return "non-canonical-spec";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::incompatible_pattern: return "incompatible-pattern";
    case ErrorKind::malformed_pattern: return "malformed-pattern";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::not_integral: return "not-integral";
    case ErrorKind::incomplete_solution: return "incomplete-solution";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : edges_(std::move(edges)),
      adjacency_(vertex_count),
      labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw Error(ErrorKind::validation_error,
                "label count " + std::to_string(labels_.size()) +
                    " does not match vertex count " +
                    std::to_string(vertex_count));
  }
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorKind::validation_error,
                  "self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorKind::validation_error,
                  "edge endpoint out of range: " + std::to_string(e.u + 1) +
                      " " + std::to_string(e.v + 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw Error(ErrorKind::validation_error,
                "duplicate edge " + std::to_string(dup->u + 1) + " " +
                    std::to_string(dup->v + 1));
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

const std::string& Graph::label(Vertex v) const {
  static const std::string empty;
  return labels_.empty() ? empty : labels_.at(v);
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == vertex_count();
}

namespace {

std::vector<std::string> numbered_labels(std::string_view prefix,
                                         std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(std::string(prefix) + ":" + std::to_string(i));
  }
  return labels;
}

}  // namespace

Graph build_path(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_parameter, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges), numbered_labels("path", n));
}

Graph build_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_parameter, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(edges), numbered_labels("cycle", n));
}

Graph build_complete(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorKind::invalid_parameter, "complete graph needs n >= 1");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges), numbered_labels("complete", n));
}

}  // namespace pathpack
