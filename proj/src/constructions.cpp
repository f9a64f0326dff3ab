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

#include "pathpack/constructions.hpp"

#include <algorithm>
#include <set>

#include "pathpack/error.hpp"

namespace pathpack {

std::string_view to_string(BaseKind kind) {
  return kind == BaseKind::cycle ? "cycle" : "complete";
}

std::string to_string(const ProductSpec& spec) {
  return "P_" + std::to_string(spec.path_length()) + " <>_" +
         std::to_string(spec.overlap) + " " +
         (spec.base == BaseKind::cycle ? "C_" : "K_") + std::to_string(spec.n);
}

void validate(const ProductSpec& spec) {
  if (spec.n < 3) {
    throw Error(ErrorKind::invalid_parameter,
                "base graph needs at least 3 vertices, got " +
                    std::to_string(spec.n));
  }
  if (spec.overlap == 0 || spec.overlap > spec.n) {
    throw Error(ErrorKind::invalid_overlap,
                "overlap " + std::to_string(spec.overlap) + " outside 1.." +
                    std::to_string(spec.n));
  }
  if (spec.copies == 0) {
    throw Error(ErrorKind::invalid_parameter, "copies must be positive");
  }
}

ProductLayout::ProductLayout(const ProductSpec& spec) : spec_(spec) {
  validate(spec_);
}

Vertex ProductLayout::path_vertex(std::size_t copy, std::size_t pos) const {
  return static_cast<Vertex>(copy * spec_.overlap + pos);
}

Vertex ProductLayout::off_path_vertex(std::size_t copy, std::size_t k) const {
  return static_cast<Vertex>(spec_.path_length() +
                             copy * spec_.off_path_per_copy() + k);
}

std::vector<Vertex> ProductLayout::traversal(std::size_t copy) const {
  std::vector<Vertex> order;
  order.reserve(spec_.n);
  order.push_back(path_vertex(copy, 0));
  for (std::size_t k = 0; k < spec_.off_path_per_copy(); ++k) {
    order.push_back(off_path_vertex(copy, k));
  }
  for (std::size_t pos = spec_.overlap; pos-- > 1;) {
    order.push_back(path_vertex(copy, pos));
  }
  return order;
}

Graph path_aligned_product(const ProductSpec& spec) {
  const ProductLayout layout(spec);
  std::set<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a == b) return;
    edges.insert(a < b ? Edge{a, b} : Edge{b, a});
  };
  for (Vertex i = 0; i + 1 < spec.path_length(); ++i) add(i, i + 1);
  for (std::size_t c = 0; c < spec.copies; ++c) {
    const auto order = layout.traversal(c);
    if (spec.base == BaseKind::cycle) {
      for (std::size_t i = 0; i < order.size(); ++i) {
        add(order[i], order[(i + 1) % order.size()]);
      }
    } else {
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          add(order[i], order[j]);
        }
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(spec.vertex_count());
  for (std::size_t i = 1; i <= spec.path_length(); ++i) {
    labels.push_back("path:" + std::to_string(i));
  }
  const std::string kind(to_string(spec.base));
  for (std::size_t c = 1; c <= spec.copies; ++c) {
    for (std::size_t k = 1; k <= spec.off_path_per_copy(); ++k) {
      labels.push_back(kind + ":" + std::to_string(c) + ":" +
                       std::to_string(k));
    }
  }
  return Graph(spec.vertex_count(),
               std::vector<Edge>(edges.begin(), edges.end()),
               std::move(labels));
}

IsoWitness attest(const Graph& source, const Graph& target,
                  std::vector<Vertex> forward) {
  IsoWitness witness{std::move(forward), false};
  const std::size_t n = source.vertex_count();
  if (target.vertex_count() != n || witness.forward.size() != n ||
      source.edge_count() != target.edge_count()) {
    return witness;
  }
  std::vector<char> hit(n, 0);
  for (Vertex image : witness.forward) {
    if (image >= n || hit[image]) return witness;
    hit[image] = 1;
  }
  // Injective on vertices and equal edge counts: mapping every source edge to
  // a target edge gives edge preservation in both directions.
  for (const auto& e : source.edges()) {
    if (!target.has_edge(witness.forward[e.u], witness.forward[e.v])) {
      return witness;
    }
  }
  witness.attested = true;
  return witness;
}

TransformResult cycle_overlap_transform(const ProductSpec& source) {
  validate(source);
  if (source.base != BaseKind::cycle) {
    throw Error(ErrorKind::invalid_parameter,
                "cycle transform needs a cycle base");
  }
  if (source.overlap < 2) {
    throw Error(ErrorKind::invalid_overlap, "cycle transform needs overlap >= 2");
  }
  ProductSpec target = source;
  target.overlap = source.n - source.overlap + 2;
  const ProductLayout from(source), to(target);
  const std::size_t l = source.overlap;
  const std::size_t l2 = target.overlap;

  std::vector<Vertex> forward(source.vertex_count());
  for (std::size_t c = 0; c < source.copies; ++c) {
    forward[from.path_vertex(c, 0)] = to.path_vertex(c, 0);
    forward[from.path_vertex(c, l - 1)] = to.path_vertex(c, l2 - 1);
    // The off-path arc becomes the new path segment ...
    for (std::size_t j = 1; j <= source.n - l; ++j) {
      forward[from.off_path_vertex(c, j - 1)] = to.path_vertex(c, j);
    }
    // ... and the old interior path vertices become the new arc.
    for (std::size_t j = 1; j + 1 < l; ++j) {
      forward[from.path_vertex(c, j)] = to.off_path_vertex(c, j - 1);
    }
  }
  return {target, attest(path_aligned_product(source),
                         path_aligned_product(target), std::move(forward))};
}

TransformResult complete_overlap_transform(const ProductSpec& source,
                                           std::size_t target_overlap) {
  validate(source);
  if (source.base != BaseKind::complete) {
    throw Error(ErrorKind::invalid_parameter,
                "complete transform needs a complete base");
  }
  if (source.overlap < 2 || target_overlap < 2 || target_overlap > source.n) {
    throw Error(ErrorKind::invalid_overlap,
                "overlaps must lie in 2.." + std::to_string(source.n));
  }
  ProductSpec target = source;
  target.overlap = target_overlap;
  const ProductLayout from(source), to(target);
  const std::size_t l = source.overlap;
  const std::size_t l2 = target.overlap;

  std::vector<Vertex> forward(source.vertex_count());
  for (std::size_t c = 0; c < source.copies; ++c) {
    forward[from.path_vertex(c, 0)] = to.path_vertex(c, 0);
    forward[from.path_vertex(c, l - 1)] = to.path_vertex(c, l2 - 1);
    std::vector<Vertex> src_mid, dst_mid;
    for (std::size_t j = 1; j + 1 < l; ++j) src_mid.push_back(from.path_vertex(c, j));
    for (std::size_t k = 0; k < source.n - l; ++k) {
      src_mid.push_back(from.off_path_vertex(c, k));
    }
    for (std::size_t j = 1; j + 1 < l2; ++j) dst_mid.push_back(to.path_vertex(c, j));
    for (std::size_t k = 0; k < target.n - l2; ++k) {
      dst_mid.push_back(to.off_path_vertex(c, k));
    }
    for (std::size_t i = 0; i < src_mid.size(); ++i) {
      forward[src_mid[i]] = dst_mid[i];
    }
  }
  return {target, attest(path_aligned_product(source),
                         path_aligned_product(target), std::move(forward))};
}

std::vector<int> transport_colors(const IsoWitness& witness,
                                  const std::vector<int>& source_colors) {
  if (source_colors.size() != witness.forward.size()) {
    throw Error(ErrorKind::invalid_input, "coloring size does not match witness");
  }
  std::vector<int> target(source_colors.size(), 0);
  for (std::size_t v = 0; v < source_colors.size(); ++v) {
    target[witness.forward[v]] = source_colors[v];
  }
  return target;
}

Graph corona(const Graph& g, std::size_t p) {
  if (p == 0) throw Error(ErrorKind::invalid_parameter, "corona needs p >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  std::vector<std::string> labels;
  labels.reserve(n * (1 + p));
  for (Vertex v = 0; v < n; ++v) {
    labels.push_back(g.has_labels() ? g.label(v) : "v:" + std::to_string(v + 1));
  }
  Vertex next = static_cast<Vertex>(n);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t k = 1; k <= p; ++k) {
      edges.push_back({v, next++});
      labels.push_back("leaf:" + std::to_string(v + 1) + ":" + std::to_string(k));
    }
  }
  return Graph(n * (1 + p), std::move(edges), std::move(labels));
}

std::size_t CaterpillarSpec::vertex_count() const {
  std::size_t total = leaves.size();
  for (auto m : leaves) total += m;
  return total;
}

CaterpillarSpec CaterpillarSpec::reversed() const {
  return {std::vector<std::size_t>(leaves.rbegin(), leaves.rend())};
}

std::string to_string(const CaterpillarSpec& spec) {
  std::string out = "C(" + std::to_string(spec.length()) + ";";
  for (std::size_t i = 0; i < spec.leaves.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.leaves[i]);
  }
  return out + ")";
}

bool is_canonical(const CaterpillarSpec& spec) {
  if (spec.leaves.empty()) return false;
  if (spec.length() == 1) return true;
  return spec.leaves.front() >= 1 && spec.leaves.back() >= 1;
}

Graph caterpillar(const CaterpillarSpec& spec) {
  if (spec.leaves.empty()) {
    throw Error(ErrorKind::invalid_parameter, "caterpillar needs l >= 1");
  }
  const std::size_t l = spec.length();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= l; ++i) labels.push_back("backbone:" + std::to_string(i));
  for (Vertex i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
  Vertex next = static_cast<Vertex>(l);
  for (Vertex i = 0; i < l; ++i) {
    for (std::size_t k = 1; k <= spec.leaves[i]; ++k) {
      edges.push_back({i, next++});
      labels.push_back("leaf:" + std::to_string(i + 1) + ":" + std::to_string(k));
    }
  }
  return Graph(next, std::move(edges), std::move(labels));
}

std::variant<CaterpillarSpec, NotCaterpillar> tree_to_caterpillar_spec(
    const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() + 1 != n || !g.is_connected()) {
    throw Error(ErrorKind::not_a_tree,
                "graph with " + std::to_string(n) + " vertices and " +
                    std::to_string(g.edge_count()) + " edges is not a tree");
  }
  if (n <= 2) return CaterpillarSpec{{n - 1}};

  std::vector<char> is_leaf(n, 0);
  for (Vertex v = 0; v < n; ++v) is_leaf[v] = g.degree(v) == 1;

  std::vector<std::size_t> residual_degree(n, 0), leaf_count(n, 0);
  Vertex end = 0;
  bool have_end = false;
  for (Vertex v = 0; v < n; ++v) {
    if (is_leaf[v]) continue;
    for (Vertex w : g.neighbors(v)) (is_leaf[w] ? leaf_count : residual_degree)[v]++;
    if (residual_degree[v] >= 3) return NotCaterpillar{v, residual_degree[v]};
    if (!have_end && residual_degree[v] <= 1) {
      end = v;
      have_end = true;
    }
  }

  CaterpillarSpec spec;
  Vertex prev = end, cur = end;
  while (true) {
    spec.leaves.push_back(leaf_count[cur]);
    Vertex next = cur;
    for (Vertex w : g.neighbors(cur)) {
      if (!is_leaf[w] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == cur) break;
    prev = cur;
    cur = next;
  }
  auto rev = spec.reversed();
  return rev.leaves > spec.leaves ? rev : spec;
}

}  // namespace pathpack
