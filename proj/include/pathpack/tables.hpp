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
#include <string>
#include <vector>

#include "pathpack/patterns.hpp"

namespace pathpack {

enum class CellOutcome { pass, fail, skipped };

std::string_view to_string(CellOutcome outcome);

struct TableCell {
  std::string entry_key;
  ProductSpec spec;
  int claimed = 0;
  bool claimed_exact = false;
  CellOutcome outcome = CellOutcome::skipped;
  int computed = 0;           // chi_p for "=" cells, colors used for "<=" cells
  std::uint64_t nodes = 0;
  std::string note;
};

struct TablesOptions {
  std::size_t max_vertices = 60;          // "=" cells
  std::uint64_t node_limit = 20'000'000;  // per "=" cell
  std::size_t bound_t_max = 40;
  std::size_t bound_t_max_k5 = 60;
  std::size_t bound_s_max = 10;
  unsigned jobs = 1;
};

struct TablesReport {
  std::vector<TableCell> equality;
  std::size_t bound_checked = 0;
  std::vector<TableCell> bound_failures;

  std::size_t equality_passed() const;
  std::size_t equality_failed() const;
  std::size_t equality_skipped() const;
  /// No failures and at least `min_proven` of the "=" cells decided.
  bool ok(double min_proven = 0.9) const;
};

/// "=" cells: every registry row stated with equality, on instances up to
/// max_vertices, re-derived by the exact solver. "<=" cells: every entry's
/// pattern coloring for t up to bound_t_max (K_5: bound_t_max_k5), every
/// cycle length up to s = bound_s_max and every overlap of a complete base,
/// validated and compared with the claimed bound.
TablesReport reproduce_tables(const TablesOptions& options = {});

/// Cycle lengths of an entry's family with s <= s_max.
std::vector<std::size_t> family_lengths(const TheoremEntry& entry,
                                        std::size_t s_max);

}  // namespace pathpack
