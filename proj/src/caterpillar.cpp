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

#include "pathpack/caterpillar.hpp"

#include <unordered_set>

#include "pathpack/error.hpp"
#include "pathpack/parallel.hpp"

namespace pathpack {

std::string to_string(Family family) {
  return "G" + std::to_string(static_cast<int>(family));
}

namespace {

// Positions are 1-based below, as in C(l; m_1..m_l).
enum class Zeros { none, odd_from_3, even_from_2 };

struct Template {
  Family family;
  std::size_t residue;   // l mod 4; ignored when fixed_length is set
  std::size_t k_min;
  std::size_t fixed_length = 0;
  Zeros zeros = Zeros::none;
  std::size_t zeros_end_gap = 1;  // zeros stop at position l - gap
  std::size_t one_leaf_at = 0;    // position with exactly one leaf, 0 = none
};

const std::vector<Template>& templates() {
  static const std::vector<Template> t = {
      {Family::G1, 0, 1, 0, Zeros::odd_from_3, 1, 0},
      {Family::G2, 1, 1, 0, Zeros::odd_from_3, 2, 1},
      {Family::G3, 1, 1, 0, Zeros::even_from_2, 1, 0},
      {Family::G4, 2, 0, 0, Zeros::odd_from_3, 1, 0},
      {Family::G5, 3, 1, 0, Zeros::odd_from_3, 2, 0},
      {Family::G6, 3, 0, 3, Zeros::none, 1, 3},
      {Family::G7, 3, 0, 0, Zeros::even_from_2, 1, 0},
  };
  return t;
}

std::optional<std::size_t> fits(const Template& tp, const std::vector<std::size_t>& m) {
  const std::size_t l = m.size();
  std::size_t k = 0;
  if (tp.fixed_length) {
    if (l != tp.fixed_length) return std::nullopt;
  } else {
    if (l % 4 != tp.residue) return std::nullopt;
    k = l / 4;
    if (k < tp.k_min) return std::nullopt;
  }
  if (tp.zeros != Zeros::none) {
    const std::size_t first = tp.zeros == Zeros::odd_from_3 ? 3 : 2;
    for (std::size_t i = first; i + tp.zeros_end_gap <= l; i += 2) {
      if (m[i - 1] != 0) return std::nullopt;
    }
  }
  if (tp.one_leaf_at && m[tp.one_leaf_at - 1] != 1) return std::nullopt;
  return k;
}

void repeat_1213(std::vector<int>& out, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), {1, 2, 1, 3});
}

std::vector<int> backbone_colors(Family family, std::size_t k) {
  std::vector<int> out;
  switch (family) {
    case Family::G1:
      out = {2, 3};
      repeat_1213(out, k - 1);
      out.insert(out.end(), {1, 2});
      break;
    case Family::G2:
      repeat_1213(out, k);
      out.push_back(2);
      break;
    case Family::G3:
      for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), {3, 1, 2, 1});
      out.push_back(3);
      break;
    case Family::G4:
      out = {2, 3};
      repeat_1213(out, k);
      break;
    case Family::G5:
      out = {2, 3};
      repeat_1213(out, k);
      out.push_back(2);
      break;
    case Family::G6:
      out = {2, 3, 1};
      break;
    case Family::G7:
      out = {2, 1, 3};
      repeat_1213(out, k);
      break;
  }
  return out;
}

void require_canonical(const CaterpillarSpec& spec) {
  if (spec.length() == 0) {
    throw Error(ErrorKind::invalid_parameter, "caterpillar needs a backbone");
  }
  if (!is_canonical(spec)) {
    throw Error(ErrorKind::non_canonical_spec,
                to_string(spec) +
                    " has an end of the backbone without leaves; strip it first "
                    "(tree_to_caterpillar_spec gives the canonical form)");
  }
}

}  // namespace

std::vector<FamilyMatch> match_families(const CaterpillarSpec& spec) {
  require_canonical(spec);
  std::vector<FamilyMatch> out;
  if (spec.length() < 2) return out;
  const CaterpillarSpec rev = spec.reversed();
  for (bool reversed : {false, true}) {
    const CaterpillarSpec& oriented = reversed ? rev : spec;
    if (reversed && rev == spec) break;  // palindromes match the same way
    for (const auto& tp : templates()) {
      if (auto k = fits(tp, oriented.leaves)) {
        out.push_back({tp.family, *k, reversed, oriented});
      }
    }
  }
  return out;
}

PackingColoring certificate_3_coloring(const FamilyMatch& match) {
  const auto& m = match.matched.leaves;
  const std::size_t l = m.size();
  const std::vector<int> backbone = backbone_colors(match.family, match.k);
  if (backbone.size() != l) {
    throw Error(ErrorKind::invalid_input, "match does not fit its family length");
  }
  // Colors in the matched orientation: backbone, then leaves per vertex.
  std::vector<int> oriented_leaf_color(l);
  for (std::size_t i = 0; i < l; ++i) {
    if (backbone[i] != 1) {
      oriented_leaf_color[i] = 1;
    } else if (m[i] > 0) {
      oriented_leaf_color[i] = match.family == Family::G2 ? 3 : 2;
    }
  }
  // Lay out on caterpillar(original): backbone 0..l-1, then leaves grouped
  // by original backbone index.
  auto original_index = [&](std::size_t i) { return match.reversed ? l - 1 - i : i; };
  std::vector<int> leaf_color(l), bb(l);
  std::vector<std::size_t> leaves(l);
  for (std::size_t i = 0; i < l; ++i) {
    bb[original_index(i)] = backbone[i];
    leaf_color[original_index(i)] = oriented_leaf_color[i];
    leaves[original_index(i)] = m[i];
  }
  PackingColoring out;
  out.colors = bb;
  for (std::size_t i = 0; i < l; ++i) {
    out.colors.insert(out.colors.end(), leaves[i], leaf_color[i]);
  }
  return out;
}

std::optional<PackingColoring> leaf_one_coloring(const CaterpillarSpec& spec,
                                                 int k_max) {
  const auto& m = spec.leaves;
  const std::size_t l = m.size();
  if (l == 0) throw Error(ErrorKind::invalid_parameter, "caterpillar needs a backbone");
  if (k_max < 1 || k_max > 15) {
    throw Error(ErrorKind::invalid_parameter, "k_max must be in 1..15");
  }

  std::vector<int> colors(l, 0);
  for (int k = 1; k <= k_max; ++k) {
    // Whether the rest can be finished depends only on the position and the
    // last k colors; failed windows are remembered per position.
    std::vector<std::unordered_set<std::uint64_t>> dead(l);
    auto window = [&](std::size_t i) {
      std::uint64_t w = 0;
      for (std::size_t d = 0; d < static_cast<std::size_t>(k) && d <= i; ++d) {
        w |= static_cast<std::uint64_t>(colors[i - d]) << (4 * d);
      }
      return w;
    };
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
      if (i == l) return true;
      for (int c = 1; c <= k; ++c) {
        if (c == 1 && m[i] > 0) continue;
        bool clash = false;
        for (std::size_t d = 1; d <= static_cast<std::size_t>(c) && d <= i; ++d) {
          if (colors[i - d] == c) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
        colors[i] = c;
        const std::uint64_t w = window(i);
        if (dead[i].count(w)) continue;
        if (self(self, i + 1)) return true;
        dead[i].insert(w);
      }
      colors[i] = 0;
      return false;
    };
    if (!dfs(dfs, 0)) continue;

    PackingColoring out;
    out.colors = colors;
    for (std::size_t j = 0; j < l; ++j) out.colors.insert(out.colors.end(), m[j], 1);
    return out;
  }
  return std::nullopt;
}

ChiClass classify_chi_p(const CaterpillarSpec& spec, std::uint64_t exact_node_limit) {
  require_canonical(spec);
  ChiClass out;
  const std::size_t l = spec.length();
  if (l == 1) {
    const std::size_t leaves = spec.leaves[0];
    out.value = leaves == 0 ? 1 : 2;
    PackingColoring c;
    c.colors.push_back(leaves == 0 ? 1 : 2);
    c.colors.insert(c.colors.end(), leaves, 1);
    out.certificate = std::move(c);
    return out;
  }
  out.matches = match_families(spec);
  if (!out.matches.empty()) {
    out.value = 3;
    out.certificate = certificate_3_coloring(out.matches.front());
    return out;
  }
  out.value = 0;
  out.upper_note = l <= 34 ? 6 : 7;
  out.witness = leaf_one_coloring(spec, 7);
  if (exact_node_limit > 0) {
    const Graph g = caterpillar(spec);
    const DistanceMatrix dm = all_pairs_distances(g);
    SolveOptions options;
    options.node_limit = exact_node_limit;
    if (out.witness) options.k_max = out.witness->k_used();
    const SolveResult r = exact_chi_p(g, dm, options);
    if (r.status == SolveStatus::optimal) {
      out.exact = r.chi_p;
      out.witness = r.witness;
    }
  }
  return out;
}

CrosscheckReport enumerate_and_crosscheck(std::size_t l_max, std::size_t m_max,
                                          unsigned jobs, std::uint64_t node_limit) {
  std::vector<CaterpillarSpec> specs;
  for (std::size_t l = 1; l <= l_max; ++l) {
    std::vector<std::size_t> m(l, 0);
    for (;;) {
      CaterpillarSpec spec{m};
      if (is_canonical(spec) && !(spec < spec.reversed())) specs.push_back(spec);
      std::size_t pos = l;
      while (pos > 0 && m[pos - 1] == m_max) m[--pos] = 0;
      if (pos == 0) break;
      ++m[pos - 1];
    }
  }

  struct One {
    bool recognized = false;
    std::size_t certificates = 0;
    bool limit = false;
    std::optional<Disagreement> problem;
  };
  auto check = [&](std::size_t i) {
    const CaterpillarSpec& spec = specs[i];
    One r;
    const Graph g = caterpillar(spec);
    const DistanceMatrix dm = all_pairs_distances(g);
    const auto matches = match_families(spec);
    r.recognized = !matches.empty();
    for (const auto& match : matches) {
      const auto cert = certificate_3_coloring(match);
      ++r.certificates;
      if (!is_valid(g, dm, cert) || cert.k_used() != 3) {
        r.problem = Disagreement{spec, true, 0,
                                 "certificate for " + to_string(match.family) +
                                     " is not a valid 3-coloring"};
        return r;
      }
    }
    SolveOptions options;
    options.node_limit = node_limit;
    const SolveResult s = exact_chi_p(g, dm, options);
    if (s.status != SolveStatus::optimal) {
      r.limit = true;
      return r;
    }
    if (r.recognized != (s.chi_p == 3)) {
      r.problem = Disagreement{spec, r.recognized, s.chi_p,
                               r.recognized ? "family matched but chi_p is " +
                                                  std::to_string(s.chi_p)
                                            : "chi_p is 3 but no family matched"};
    }
    return r;
  };

  const auto results = parallel_map<One>(specs.size(), jobs, check);
  CrosscheckReport report;
  for (const auto& r : results) {
    ++report.checked;
    if (r.recognized) ++report.recognized;
    report.certificates_checked += r.certificates;
    if (r.limit) report.partial = true;
    if (r.problem) report.disagreements.push_back(*r.problem);
  }
  return report;
}

}  // namespace pathpack
