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

#include "pathpack/tables.hpp"

#include "pathpack/parallel.hpp"

namespace pathpack {

std::string_view to_string(CellOutcome outcome) {
  switch (outcome) {
    case CellOutcome::pass: return "pass";
    case CellOutcome::fail: return "FAIL";
    case CellOutcome::skipped: return "skipped";
  }
  return "?";
}

std::size_t TablesReport::equality_passed() const {
  std::size_t n = 0;
  for (const auto& c : equality) n += c.outcome == CellOutcome::pass;
  return n;
}

std::size_t TablesReport::equality_failed() const {
  std::size_t n = 0;
  for (const auto& c : equality) n += c.outcome == CellOutcome::fail;
  return n;
}

std::size_t TablesReport::equality_skipped() const {
  std::size_t n = 0;
  for (const auto& c : equality) n += c.outcome == CellOutcome::skipped;
  return n;
}

bool TablesReport::ok(double min_proven) const {
  if (equality_failed() > 0 || !bound_failures.empty()) return false;
  if (equality.empty()) return true;
  return static_cast<double>(equality_passed()) >=
         min_proven * static_cast<double>(equality.size());
}

std::vector<std::size_t> family_lengths(const TheoremEntry& entry,
                                        std::size_t s_max) {
  if (entry.family.modulus == 0) return {entry.family.residue};
  std::vector<std::size_t> out;
  for (std::size_t s = std::max<std::size_t>(entry.family.s_min, 1); s <= s_max; ++s) {
    out.push_back(entry.family.n_for(s));
  }
  return out;
}

namespace {

struct EqualityJob {
  const TheoremEntry* entry;
  ProductSpec spec;
  int claimed;
};

TableCell run_equality(const EqualityJob& job, std::uint64_t node_limit) {
  TableCell cell;
  cell.entry_key = job.entry->key;
  cell.spec = job.spec;
  cell.claimed = job.claimed;
  cell.claimed_exact = true;
  const Graph g = path_aligned_product(job.spec);
  const DistanceMatrix dm = all_pairs_distances(g);
  SolveOptions options;
  options.node_limit = node_limit;
  options.k_max = job.claimed;  // only refuting k < claimed is in question
  const SolveResult r = exact_chi_p(g, dm, options);
  cell.nodes = r.nodes_expanded;
  switch (r.status) {
    case SolveStatus::optimal:
      cell.computed = r.chi_p;
      cell.outcome = r.chi_p == job.claimed ? CellOutcome::pass : CellOutcome::fail;
      break;
    case SolveStatus::exceeded:
      cell.computed = job.claimed + 1;
      cell.outcome = CellOutcome::fail;
      cell.note = "no coloring with the claimed number of colors";
      break;
    case SolveStatus::limit_hit:
      cell.outcome = CellOutcome::skipped;
      cell.computed = 0;
      cell.note = "node limit; refuted below " + std::to_string(r.proven_lower);
      break;
  }
  return cell;
}

}  // namespace

TablesReport reproduce_tables(const TablesOptions& options) {
  TablesReport report;

  // "=" cells, smallest instances first within each entry.
  std::vector<EqualityJob> jobs;
  for (const auto& entry : registry()) {
    for (const auto& row : entry.bounds) {
      if (!row.exact) continue;
      for (std::size_t n : family_lengths(entry, options.max_vertices)) {
        for (std::size_t t = row.t_min;
             (row.t_max == 0 || t <= row.t_max) && n * t <= options.max_vertices; ++t) {
          jobs.push_back({&entry, {entry.base, n, entry.overlap, t}, row.bound});
        }
      }
    }
  }
  report.equality = parallel_map<TableCell>(
      jobs.size(), options.jobs,
      [&](std::size_t i) { return run_equality(jobs[i], options.node_limit); });

  // "<=" cells.
  std::vector<ProductSpec> specs;
  std::vector<const TheoremEntry*> owners;
  for (const auto& entry : registry()) {
    const std::size_t t_max =
        entry.key == "K5-l2" ? options.bound_t_max_k5 : options.bound_t_max;
    for (std::size_t n : family_lengths(entry, options.bound_s_max)) {
      const std::size_t l_hi = entry.base == BaseKind::complete ? n : entry.overlap;
      for (std::size_t l = entry.overlap; l <= l_hi; ++l) {
        for (std::size_t t = 1; t <= t_max; ++t) {
          specs.push_back({entry.base, n, l, t});
          owners.push_back(&entry);
        }
      }
    }
  }
  auto bound_cells = parallel_map<TableCell>(specs.size(), options.jobs, [&](std::size_t i) {
    TableCell cell;
    cell.entry_key = owners[i]->key;
    cell.spec = specs[i];
    try {
      const TheoremColoring tc = color_by_theorem(specs[i]);
      cell.claimed = tc.claimed_bound;
      cell.claimed_exact = tc.claimed_exact;
      cell.computed = tc.coloring.k_used();
      const Graph g = path_aligned_product(specs[i]);
      const DistanceMatrix dm = all_pairs_distances(g);
      const auto violations = validate(g, dm, tc.coloring);
      if (!violations.empty()) {
        cell.outcome = CellOutcome::fail;
        cell.note = std::to_string(violations.size()) + " violating pairs";
      } else if (cell.computed > cell.claimed) {
        cell.outcome = CellOutcome::fail;
        cell.note = "uses more colors than claimed";
      } else {
        cell.outcome = CellOutcome::pass;
      }
    } catch (const std::exception& e) {
      cell.outcome = CellOutcome::fail;
      cell.note = e.what();
    }
    return cell;
  });
  report.bound_checked = bound_cells.size();
  for (auto& cell : bound_cells) {
    if (cell.outcome != CellOutcome::pass) report.bound_failures.push_back(std::move(cell));
  }
  return report;
}

}  // namespace pathpack
