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
#include <cstdint>
#include <iosfwd>
#include <filesystem>
#include <vector>

#include "pathpack/distances.hpp"
#include "pathpack/graph.hpp"

namespace pathpack {

/// Color per vertex, colors start at 1.
struct PackingColoring {
  std::vector<int> colors;

  int k_used() const;
  friend bool operator==(const PackingColoring&,
                         const PackingColoring&) = default;
};

/// Two vertices sharing `color` at distance <= color.
struct Violation {
  Vertex u;
  Vertex v;
  int color;
  std::uint32_t dist;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every violating pair with u < v, ordered by (u, v). Throws invalid-input
/// when the coloring does not cover the graph or uses a color below 1.
std::vector<Violation> validate(const Graph& g, const DistanceMatrix& dm,
                                const PackingColoring& coloring);
bool is_valid(const Graph& g, const DistanceMatrix& dm,
              const PackingColoring& coloring);

// Bounds ---------------------------------------------------------------------

/// Largest clique size. Falls back to the best clique found when the search
/// budget runs out, which is still a valid lower bound on chi_p.
std::size_t clique_number(const Graph& g);

/// Maximum number of vertices pairwise at distance > `spacing`, i.e. the
/// largest spacing-packing. Exact for graphs up to 64 vertices within the
/// search budget; returns the vertex count (a trivial upper bound) otherwise.
std::size_t packing_number_upper(const DistanceMatrix& dm,
                                 std::uint32_t spacing);

/// Minimum vertex cover size by exhaustive branching; `g` must have at most
/// 30 vertices.
std::size_t min_vertex_cover(const Graph& g);

/// Combines: 1; 2 when there is an edge; the clique number; beta + 1 for
/// diameter-2 graphs (up to 30 vertices); the counting bound where colors
/// above diam - 1 appear at most once and color i covers at most one
/// i-packing.
int lower_bound(const Graph& g, const DistanceMatrix& dm);

// Solvers --------------------------------------------------------------------

enum class SolveStatus { optimal, limit_hit, exceeded };

std::string_view to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::optimal;
  /// chi_p when optimal; best known upper bound (witness colors) otherwise.
  int chi_p = 0;
  PackingColoring witness;
  std::uint64_t nodes_expanded = 0;
  bool proven_optimal = false;
  /// Every k below this value was refuted exhaustively.
  int proven_lower = 0;
};

struct SolveOptions {
  /// Largest k tried; 0 means the vertex count.
  int k_max = 0;
  std::uint64_t node_limit = 50'000'000;
  /// Optional pre-assigned colors (0 = free), one entry per vertex.
  std::vector<int> fixed;
};

/// Exhaustive enumeration over vertex index order with no pruning beyond
/// prefix validity. Cross-checking oracle; at most 16 vertices.
SolveResult brute_force_chi_p(const Graph& g, const DistanceMatrix& dm,
                              int k_max);

enum class Feasibility { feasible, infeasible, limit_hit };

struct FeasibilityResult {
  Feasibility status = Feasibility::infeasible;
  PackingColoring coloring;
  std::uint64_t nodes_expanded = 0;
};

/// Depth-first search for a packing coloring with colors 1..k. Vertices are
/// visited breadth-first from vertex 0, colors in ascending order, with
/// forward checking on the distance table.
FeasibilityResult find_packing_coloring(const Graph& g, const DistanceMatrix& dm,
                                        int k, std::uint64_t node_limit,
                                        const std::vector<int>& fixed = {});

/// Iterative deepening over k from `lower_bound`.
SolveResult exact_chi_p(const Graph& g, const DistanceMatrix& dm,
                        const SolveOptions& options = {});

/// First-fit in breadth-first order with unbounded colors. Always valid;
/// honours `fixed` entries when they are themselves consistent.
PackingColoring greedy_packing_coloring(const Graph& g, const DistanceMatrix& dm,
                                        const std::vector<int>& fixed = {});

// Coloring files: "k <k_used>" then "v <vertex> <color>", 1-based vertices.

PackingColoring parse_coloring(std::istream& in);
void format_coloring(const PackingColoring& coloring, std::ostream& out);
PackingColoring read_coloring(const std::filesystem::path& path);
void write_coloring(const PackingColoring& coloring,
                    const std::filesystem::path& path);

}  // namespace pathpack
