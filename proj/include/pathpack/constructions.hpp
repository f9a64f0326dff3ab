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

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "pathpack/graph.hpp"

namespace pathpack {

enum class BaseKind { cycle, complete };

std::string_view to_string(BaseKind kind);

/// P_{l*t} <>_l G for G a cycle or complete graph on `n` vertices: a path of
/// `overlap * copies` vertices where copy i shares path positions
/// i*overlap .. i*overlap + overlap - 1 (0-based) with the i-th copy of G.
struct ProductSpec {
  BaseKind base = BaseKind::cycle;
  std::size_t n = 3;
  std::size_t overlap = 2;
  std::size_t copies = 1;

  std::size_t path_length() const { return overlap * copies; }
  std::size_t off_path_per_copy() const { return n - overlap; }
  std::size_t vertex_count() const { return n * copies; }

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

std::string to_string(const ProductSpec& spec);

/// Throws invalid-parameter / invalid-overlap. Overlap 1 is accepted by the
/// builder for experiments but not by the transforms or pattern registry.
void validate(const ProductSpec& spec);

/// Vertex addressing of a product, independent of labels.
///
/// Path vertices come first (0 .. path_length-1), then each copy's off-path
/// vertices in copy order. Off-path vertices of a cycle copy are numbered in
/// traversal order from the neighbor of the copy's first path vertex to the
/// neighbor of its last path vertex.
class ProductLayout {
 public:
  explicit ProductLayout(const ProductSpec& spec);

  const ProductSpec& spec() const noexcept { return spec_; }
  std::size_t vertex_count() const { return spec_.vertex_count(); }

  Vertex path_vertex(std::size_t copy, std::size_t pos) const;
  Vertex off_path_vertex(std::size_t copy, std::size_t k) const;

  /// The copy's vertices in cycle traversal order: first path vertex, the
  /// off-path vertices, then the remaining path vertices last to second.
  std::vector<Vertex> traversal(std::size_t copy) const;

 private:
  ProductSpec spec_;
};

Graph path_aligned_product(const ProductSpec& spec);

/// Vertex bijection source -> target, `attested` once edge preservation has
/// been checked in both directions.
struct IsoWitness {
  std::vector<Vertex> forward;
  bool attested = false;
};

/// Checks bijectivity and that {u,v} in E(source) iff {f(u),f(v)} in
/// E(target). Returns the witness with `attested` set accordingly.
IsoWitness attest(const Graph& source, const Graph& target,
                  std::vector<Vertex> forward);

struct TransformResult {
  ProductSpec target;
  IsoWitness witness;  // from path_aligned_product(source) to (target)
};

/// Re-routes each cycle copy through its off-path arc: overlap l becomes
/// n - l + 2 with the same number of copies.
TransformResult cycle_overlap_transform(const ProductSpec& source);

/// Moves overlap vertices of each complete copy on or off the path.
TransformResult complete_overlap_transform(const ProductSpec& source,
                                           std::size_t target_overlap);

/// Color a target graph from a coloring of the source through a witness.
std::vector<int> transport_colors(const IsoWitness& witness,
                                  const std::vector<int>& source_colors);

/// G o pK_1: p pendant leaves on every vertex of `g`.
Graph corona(const Graph& g, std::size_t p);

/// C(l; m_1..m_l).
struct CaterpillarSpec {
  std::vector<std::size_t> leaves;

  std::size_t length() const { return leaves.size(); }
  std::size_t vertex_count() const;
  CaterpillarSpec reversed() const;

  friend bool operator==(const CaterpillarSpec&,
                         const CaterpillarSpec&) = default;
  friend auto operator<=>(const CaterpillarSpec&,
                          const CaterpillarSpec&) = default;
};

/// "C(4;4,1,0,1)"
std::string to_string(const CaterpillarSpec& spec);

/// m_1 >= 1 and m_l >= 1 whenever l >= 2.
bool is_canonical(const CaterpillarSpec& spec);

/// Backbone vertices 0..l-1, then leaves grouped by backbone vertex. Builds
/// non-canonical specs too; callers check `is_canonical` when they care.
Graph caterpillar(const CaterpillarSpec& spec);

struct NotCaterpillar {
  Vertex vertex;              // residual vertex of degree >= 3
  std::size_t residual_degree;
};

/// Recovers the spec of a tree by stripping pendant edges. Of the two
/// backbone orientations the lexicographically larger leaf sequence is
/// returned. Throws not-a-tree.
std::variant<CaterpillarSpec, NotCaterpillar> tree_to_caterpillar_spec(
    const Graph& g);

}  // namespace pathpack
