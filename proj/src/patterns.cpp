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

#include "pathpack/patterns.hpp"

#include <cctype>
#include <sstream>

#include "pathpack/error.hpp"
#include "pathpack/parallel.hpp"

namespace pathpack {

// Parsing --------------------------------------------------------------------

namespace {

class BlockParser {
 public:
  explicit BlockParser(std::string_view text) : text_(text) {}

  std::vector<PatternItem> parse() {
    std::vector<PatternItem> items;
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char c = text_[pos_];
      if (c == 'b') {
        ++pos_;
        items.push_back({PatternItem::Kind::bold, {number()}});
      } else if (c == '[') {
        ++pos_;
        PatternItem item{PatternItem::Kind::star, list(']')};
        expect('*');
        items.push_back(std::move(item));
      } else if (c == '<') {
        ++pos_;
        expect('(');
        items.push_back({PatternItem::Kind::reversed_bold, list(')')});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        items.push_back({PatternItem::Kind::plain, {number()}});
      } else {
        fail("unexpected '" + std::string(1, c) + "'");
      }
    }
    return items;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::malformed_pattern,
                what + " at offset " + std::to_string(pos_) + " in '" +
                    std::string(text_) + "'");
  }

  void expect(char c) {
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    const std::size_t start = pos_;
    int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("color too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a color");
    if (value < 1) fail("colors start at 1");
    return value;
  }

  std::vector<int> list(char close) {
    std::vector<int> out;
    for (;;) {
      skip_space();
      if (at_end()) fail(std::string("missing '") + close + "'");
      if (text_[pos_] == close) {
        ++pos_;
        break;
      }
      out.push_back(number());
    }
    if (out.empty()) fail("empty group");
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_colors(std::ostringstream& out, const std::vector<int>& colors) {
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) out << ' ';
    out << colors[i];
  }
}

}  // namespace

Block parse_block(std::string_view text, std::string name) {
  return Block{std::move(name), BlockParser(text).parse()};
}

std::string format_block(const Block& block) {
  std::ostringstream out;
  bool first = true;
  for (const auto& item : block.items) {
    if (!first) out << ' ';
    first = false;
    switch (item.kind) {
      case PatternItem::Kind::bold:
        out << 'b' << item.colors.front();
        break;
      case PatternItem::Kind::plain:
        out << item.colors.front();
        break;
      case PatternItem::Kind::star:
        out << '[';
        append_colors(out, item.colors);
        out << "]*";
        break;
      case PatternItem::Kind::reversed_bold:
        out << "<(";
        append_colors(out, item.colors);
        out << ')';
        break;
    }
  }
  return out.str();
}

// Expansion ------------------------------------------------------------------

std::vector<int> expand_block(const Block& block, const ProductSpec& spec) {
  using Kind = PatternItem::Kind;
  const auto& items = block.items;
  const std::string where = block.name.empty() ? "block" : "block (" + block.name + ")";
  if (items.empty() || items.front().kind != Kind::bold) {
    throw Error(ErrorKind::malformed_pattern, where + " must start with a bold color");
  }

  // Layout: bold, then plain/star items, then bold/reversed items.
  std::size_t split = 1;
  while (split < items.size() &&
         (items[split].kind == Kind::plain || items[split].kind == Kind::star)) {
    ++split;
  }
  std::size_t bold = 1, fixed = 0, stars = 0;
  const PatternItem* star = nullptr;
  for (std::size_t i = 1; i < items.size(); ++i) {
    const auto& item = items[i];
    if (i < split) {
      if (item.kind == Kind::star) {
        ++stars;
        star = &item;
      } else {
        ++fixed;
      }
    } else if (item.kind == Kind::bold || item.kind == Kind::reversed_bold) {
      bold += item.colors.size();
    } else {
      throw Error(ErrorKind::malformed_pattern,
                  where + ": off-path colors after the trailing path colors");
    }
  }
  if (stars > 1) {
    throw Error(ErrorKind::malformed_pattern, where + " has more than one [ ]* group");
  }
  if (bold != spec.overlap) {
    throw Error(ErrorKind::malformed_pattern,
                where + " has " + std::to_string(bold) + " path colors, overlap is " +
                    std::to_string(spec.overlap));
  }

  const std::size_t off = spec.off_path_per_copy();
  std::size_t repeats = 0;
  if (star) {
    const std::size_t period = star->colors.size();
    if (fixed > off || (off - fixed) % period != 0) {
      throw Error(ErrorKind::incompatible_pattern,
                  where + " cannot fill " + std::to_string(off) +
                      " off-path vertices: " + std::to_string(fixed) + " fixed plus a multiple of " +
                      std::to_string(period));
    }
    repeats = (off - fixed) / period;
  } else if (fixed != off) {
    throw Error(ErrorKind::incompatible_pattern,
                where + " lists " + std::to_string(fixed) + " off-path colors, copy has " +
                    std::to_string(off));
  }

  std::vector<int> out;
  out.reserve(spec.n);
  for (const auto& item : items) {
    if (item.kind == Kind::star) {
      for (std::size_t r = 0; r < repeats; ++r) {
        out.insert(out.end(), item.colors.begin(), item.colors.end());
      }
    } else {
      out.insert(out.end(), item.colors.begin(), item.colors.end());
    }
  }
  return out;
}

PackingColoring expand_pattern(const Pattern& pattern, const ProductSpec& spec) {
  validate(spec);
  if (pattern.size() != spec.copies) {
    throw Error(ErrorKind::malformed_pattern,
                std::to_string(pattern.size()) + " blocks for " +
                    std::to_string(spec.copies) + " copies");
  }
  const ProductLayout layout(spec);
  PackingColoring out;
  out.colors.assign(spec.vertex_count(), 0);
  for (std::size_t c = 0; c < spec.copies; ++c) {
    const auto colors = expand_block(pattern[c], spec);
    const auto order = layout.traversal(c);
    for (std::size_t i = 0; i < order.size(); ++i) {
      out.colors[order[i]] = colors[i];
    }
  }
  return out;
}

std::vector<int> base_cycle_colors(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_parameter, "cycle needs n >= 3");
  if (n == 3) return {1, 2, 3};
  std::vector<int> out;
  for (std::size_t i = 0; i < n / 4; ++i) out.insert(out.end(), {1, 2, 1, 3});
  switch (n % 4) {
    case 1: out.push_back(4); break;
    case 2: out.insert(out.end(), {1, 4}); break;
    case 3: out.insert(out.end(), {1, 2, 4}); break;
    default: break;
  }
  return out;
}

// Registry -------------------------------------------------------------------

bool CycleFamily::matches(std::size_t n) const {
  if (modulus == 0) return n == residue;
  if (n < residue || (n - residue) % modulus != 0) return false;
  return (n - residue) / modulus >= s_min;
}

const BoundRow* TheoremEntry::row_for(std::size_t t) const {
  for (const auto& row : bounds) {
    if (row.contains(t)) return &row;
  }
  return nullptr;
}

int TheoremEntry::claimed_bound(std::size_t t) const {
  const BoundRow* row = row_for(t);
  if (!row) {
    throw Error(ErrorKind::unsupported,
                key + " states no bound for t = " + std::to_string(t));
  }
  return row->bound;
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::direct: return "direct";
    case Route::cycle_transform: return "cycle-transform";
    case Route::complete_transform: return "complete-transform";
  }
  return "?";
}

namespace {

const TheoremEntry* find_entry(BaseKind base, std::size_t n, std::size_t overlap) {
  for (const auto& e : registry()) {
    if (e.base == base && e.overlap == overlap && e.family.matches(n)) return &e;
  }
  return nullptr;
}

}  // namespace

Lookup lookup(const ProductSpec& spec) {
  validate(spec);
  Lookup out;
  out.pattern_spec = spec;
  if (spec.overlap < 2) {
    out.hint = "overlap 1 has no pattern; use the solver";
    return out;
  }
  if (spec.base == BaseKind::complete) {
    const TheoremEntry* e = find_entry(BaseKind::complete, spec.n, 2);
    if (!e) {
      out.hint = "no pattern for K_" + std::to_string(spec.n) +
                 " (patterns exist for K_3, K_4, K_5); use the solver";
      return out;
    }
    out.entry = e;
    if (spec.overlap != 2) {
      out.route = Route::complete_transform;
      out.pattern_spec.overlap = 2;
    }
    return out;
  }

  if (const TheoremEntry* e = find_entry(BaseKind::cycle, spec.n, spec.overlap)) {
    out.entry = e;
    return out;
  }
  const std::size_t dual = spec.n - spec.overlap + 2;
  if (dual >= 2 && dual <= spec.n) {
    if (const TheoremEntry* e = find_entry(BaseKind::cycle, spec.n, dual)) {
      out.entry = e;
      out.route = Route::cycle_transform;
      out.pattern_spec.overlap = dual;
      return out;
    }
  }
  std::ostringstream hint;
  hint << "no pattern for C_" << spec.n << " with overlap " << spec.overlap
       << "; the cycle transform maps it to overlap " << spec.n << " - "
       << spec.overlap << " + 2 = " << dual;
  if (dual == spec.overlap) {
    hint << " (a fixed point)";
  } else {
    hint << ", also without a pattern";
  }
  hint << "; use the solver";
  out.hint = hint.str();
  return out;
}

std::vector<std::string> schedule(const TheoremEntry& entry, std::size_t t,
                                  bool* rederived) {
  if (rederived) *rederived = false;
  if (t == 0) throw Error(ErrorKind::invalid_parameter, "t must be >= 1");
  for (const auto& regime : entry.regimes) {
    if (!regime.contains(t)) continue;
    if (regime.base_coloring) return {"base"};
    if (auto it = regime.explicit_t.find(t); it != regime.explicit_t.end()) {
      return it->second;
    }
    if (regime.unit.empty()) break;
    const std::size_t period = regime.unit.size();
    std::vector<std::string> out;
    out.reserve(t);
    for (std::size_t q = 0; q < t / period; ++q) {
      out.insert(out.end(), regime.unit.begin(), regime.unit.end());
    }
    const std::size_t r = t % period;
    if (r > 0) {
      auto it = regime.remainder.find(r);
      if (it != regime.remainder.end() && it->second.size() == r) {
        out.insert(out.end(), it->second.begin(), it->second.end());
      } else {
        if (rederived) *rederived = true;
        out.insert(out.end(), regime.unit.begin(),
                   regime.unit.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    return out;
  }
  throw Error(ErrorKind::unsupported,
              entry.key + " has no schedule for t = " + std::to_string(t));
}

TheoremColoring color_by_theorem(const ProductSpec& spec) {
  const Lookup found = lookup(spec);
  if (!found.entry) throw Error(ErrorKind::unsupported, to_string(spec) + ": " + found.hint);
  const TheoremEntry& entry = *found.entry;
  const ProductSpec& pspec = found.pattern_spec;

  TheoremColoring out;
  out.entry_key = entry.key;
  out.anchor = entry.anchor;
  out.route = found.route;
  const BoundRow* row = entry.row_for(spec.copies);
  if (!row) {
    throw Error(ErrorKind::unsupported,
                entry.key + " states no bound for t = " + std::to_string(spec.copies));
  }
  out.claimed_bound = row->bound;
  out.claimed_exact = row->exact;
  out.trace = schedule(entry, spec.copies, &out.remainder_rederived);

  PackingColoring colored;
  if (out.trace.size() == 1 && out.trace.front() == "base") {
    const auto base = base_cycle_colors(pspec.n);
    const auto order = ProductLayout(pspec).traversal(0);
    colored.colors.assign(pspec.vertex_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) colored.colors[order[i]] = base[i];
  } else {
    Pattern pattern;
    pattern.reserve(out.trace.size());
    for (const auto& name : out.trace) {
      auto it = entry.blocks.find(name);
      if (it == entry.blocks.end()) {
        throw Error(ErrorKind::malformed_pattern,
                    entry.key + " schedules unknown block (" + name + ")");
      }
      pattern.push_back(parse_block(it->second, name));
    }
    colored = expand_pattern(pattern, pspec);
  }

  switch (found.route) {
    case Route::direct:
      out.coloring = std::move(colored);
      break;
    case Route::cycle_transform: {
      const auto tr = cycle_overlap_transform(pspec);
      out.coloring.colors = transport_colors(tr.witness, colored.colors);
      break;
    }
    case Route::complete_transform: {
      const auto tr = complete_overlap_transform(pspec, spec.overlap);
      out.coloring.colors = transport_colors(tr.witness, colored.colors);
      break;
    }
  }
  return out;
}

// Dispatch and experiments ---------------------------------------------------

UpperBound upper_bound_via_solver(const Graph& g, const DistanceMatrix& dm,
                                  std::uint64_t node_limit) {
  SolveOptions options;
  options.node_limit = node_limit;
  const SolveResult r = exact_chi_p(g, dm, options);
  UpperBound out;
  out.witness = r.witness;
  out.bound = r.witness.k_used();
  out.method = r.status == SolveStatus::optimal ? "exact" : "incumbent";
  return out;
}

UpperBound upper_bound_via_pattern_or_solver(const ProductSpec& spec,
                                             std::uint64_t node_limit) {
  if (lookup(spec).entry) {
    auto tc = color_by_theorem(spec);
    UpperBound out;
    out.bound = tc.coloring.k_used();
    out.witness = std::move(tc.coloring);
    out.method = "pattern";
    return out;
  }
  const Graph g = path_aligned_product(spec);
  return upper_bound_via_solver(g, all_pairs_distances(g), node_limit);
}

ProbeReport conjecture_probe(const ProbeRequest& request) {
  std::vector<ProductSpec> specs;
  for (std::size_t n = std::max<std::size_t>(request.n_min, 3); n <= request.n_max; ++n) {
    for (std::size_t l = std::max<std::size_t>(request.overlap_min, 1);
         l <= std::min(request.overlap_max, n); ++l) {
      for (std::size_t t = std::max<std::size_t>(request.t_min, 1); t <= request.t_max; ++t) {
        specs.push_back({request.base, n, l, t});
      }
    }
  }

  auto probe_one = [&](std::size_t i) {
    const ProductSpec& spec = specs[i];
    ProbeRow row;
    row.spec = spec;
    const Graph g = path_aligned_product(spec);
    const DistanceMatrix dm = all_pairs_distances(g);

    int pattern_bound = 0;
    if (lookup(spec).entry) {
      const auto tc = color_by_theorem(spec);
      if (is_valid(g, dm, tc.coloring)) pattern_bound = tc.coloring.k_used();
    }
    SolveOptions options;
    options.node_limit = request.node_limit;
    const SolveResult r = exact_chi_p(g, dm, options);
    row.nodes = r.nodes_expanded;
    row.proven_lower = r.proven_lower;
    if (r.status == SolveStatus::optimal) {
      row.best_upper = r.chi_p;
      row.method = "exact";
      row.proven_optimal = true;
    } else if (pattern_bound > 0 && pattern_bound <= r.witness.k_used()) {
      row.best_upper = pattern_bound;
      row.method = "pattern";
    } else {
      row.best_upper = r.witness.k_used();
      row.method = "incumbent";
    }
    // A pattern bound meeting the refuted range is optimal too.
    if (!row.proven_optimal && row.best_upper == row.proven_lower) {
      row.proven_optimal = true;
    }
    return row;
  };

  ProbeReport report;
  if (request.jobs <= 1) {
    std::uint64_t spent = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (request.node_budget && spent >= request.node_budget) {
        report.partial = true;
        break;
      }
      report.rows.push_back(probe_one(i));
      spent += report.rows.back().nodes;
    }
    return report;
  }
  auto rows = parallel_map<ProbeRow>(specs.size(), request.jobs, probe_one);
  // Same cut as the sequential loop so output does not depend on jobs.
  std::uint64_t spent = 0;
  for (auto& row : rows) {
    if (request.node_budget && spent >= request.node_budget) {
      report.partial = true;
      break;
    }
    spent += row.nodes;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace pathpack
