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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathpack/constructions.hpp"
#include "pathpack/packing.hpp"

namespace pathpack {

// Pattern notation -----------------------------------------------------------
//
// A block colors one copy in cycle traversal order. Text form, whitespace
// separated:
//   b3          bold color: a path vertex
//   3           plain color: an off-path vertex
//   [2 1 3 1]*  repeated group filling the remaining off-path vertices
//   <(3 1)      path colors listed last-to-second (the arrowed suffix)
// e.g. "b2 1 [3 1 2 1]* <(3 1)".

struct PatternItem {
  enum class Kind { bold, plain, star, reversed_bold };
  Kind kind = Kind::plain;
  std::vector<int> colors;

  friend bool operator==(const PatternItem&, const PatternItem&) = default;
};

struct Block {
  std::string name;
  std::vector<PatternItem> items;
};

Block parse_block(std::string_view text, std::string name = {});
std::string format_block(const Block& block);

/// One block per copy.
using Pattern = std::vector<Block>;

/// Colors of one copy in traversal order (see ProductLayout::traversal).
/// Throws malformed-pattern when the bold items do not match the overlap or
/// are out of place, incompatible-pattern when the star cannot fill the copy.
std::vector<int> expand_block(const Block& block, const ProductSpec& spec);

PackingColoring expand_pattern(const Pattern& pattern, const ProductSpec& spec);

/// Packing coloring of C_n listed from any vertex around the cycle: 3 colors
/// for n = 3 or n divisible by 4, 4 otherwise.
std::vector<int> base_cycle_colors(std::size_t n);

// Registry -------------------------------------------------------------------

struct BoundRow {
  std::size_t t_min = 1;
  std::size_t t_max = 0;  // 0 = unbounded
  int bound = 0;
  bool exact = false;  // the theorem states equality on this range

  bool contains(std::size_t t) const {
    return t >= t_min && (t_max == 0 || t <= t_max);
  }
};

/// How the copies are assigned blocks for a range of t.
struct Regime {
  std::size_t t_min = 1;
  std::size_t t_max = 0;  // 0 = unbounded
  /// t = 1 colored by base_cycle_colors instead of a block.
  bool base_coloring = false;
  /// Explicit block sequences for particular t.
  std::map<std::size_t, std::vector<std::string>> explicit_t;
  /// Repeated floor(t / unit.size()) times ...
  std::vector<std::string> unit;
  /// ... then the prefix listed for t mod unit.size(), as written in the
  /// proof.
  std::map<std::size_t, std::vector<std::string>> remainder;

  bool contains(std::size_t t) const {
    return t >= t_min && (t_max == 0 || t <= t_max);
  }
};

/// Cycle lengths n = modulus * s + residue with s >= s_min, or a single n
/// when modulus is 0.
struct CycleFamily {
  std::size_t modulus = 0;
  std::size_t residue = 0;
  std::size_t s_min = 0;

  bool matches(std::size_t n) const;
  std::size_t n_for(std::size_t s) const { return modulus * s + residue; }
};

struct TheoremEntry {
  std::string key;
  std::string anchor;
  BaseKind base = BaseKind::cycle;
  CycleFamily family;
  std::size_t overlap = 2;
  std::vector<BoundRow> bounds;
  std::map<std::string, std::string> blocks;
  std::vector<Regime> regimes;

  const BoundRow* row_for(std::size_t t) const;
  int claimed_bound(std::size_t t) const;
};

const std::vector<TheoremEntry>& registry();
const TheoremEntry& registry_entry(std::string_view key);

enum class Route { direct, cycle_transform, complete_transform };

std::string_view to_string(Route route);

struct Lookup {
  const TheoremEntry* entry = nullptr;  // null when unsupported
  Route route = Route::direct;
  /// The spec the entry's blocks are laid on; differs from the request when
  /// an isomorphism transform is involved.
  ProductSpec pattern_spec;
  std::string hint;  // set when unsupported
};

Lookup lookup(const ProductSpec& spec);

struct TheoremColoring {
  PackingColoring coloring;
  int claimed_bound = 0;
  bool claimed_exact = false;
  std::string entry_key;
  std::string anchor;
  Route route = Route::direct;
  /// Block name used for each copy (of the pattern spec).
  std::vector<std::string> trace;
  /// A remainder prefix as written did not have t mod period blocks and was
  /// replaced by the first t mod period blocks of the unit.
  bool remainder_rederived = false;
};

/// Block names for copies 1..t under the entry's schedule.
std::vector<std::string> schedule(const TheoremEntry& entry, std::size_t t,
                                  bool* rederived = nullptr);

/// Throws unsupported when lookup fails.
TheoremColoring color_by_theorem(const ProductSpec& spec);

// Dispatch and experiments ---------------------------------------------------

struct UpperBound {
  int bound = 0;
  PackingColoring witness;
  std::string method;  // "pattern", "exact", "greedy"
};

/// Pattern coloring when the registry covers the spec, otherwise the exact
/// solver (falling back to its incumbent when the node limit is reached).
UpperBound upper_bound_via_pattern_or_solver(
    const ProductSpec& spec, std::uint64_t node_limit = 50'000'000);
UpperBound upper_bound_via_solver(const Graph& g, const DistanceMatrix& dm,
                                  std::uint64_t node_limit = 50'000'000);

struct ProbeRequest {
  BaseKind base = BaseKind::cycle;
  std::size_t n_min = 3, n_max = 3;
  std::size_t overlap_min = 2, overlap_max = 2;
  std::size_t t_min = 1, t_max = 1;
  std::uint64_t node_limit = 2'000'000;   // per instance
  std::uint64_t node_budget = 0;          // whole probe, 0 = unlimited
  int reference_bound = 0;                // e.g. 5 or 22; reported only
  unsigned jobs = 1;
};

struct ProbeRow {
  ProductSpec spec;
  int best_upper = 0;
  std::string method;
  bool proven_optimal = false;
  int proven_lower = 0;
  std::uint64_t nodes = 0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  bool partial = false;
};

ProbeReport conjecture_probe(const ProbeRequest& request);

}  // namespace pathpack
