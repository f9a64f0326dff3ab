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

#include <stdexcept>

#include "pathpack/error.hpp"
#include "pathpack/patterns.hpp"

namespace pathpack {

namespace {

using Names = std::vector<std::string>;

constexpr std::size_t kOpen = 0;

Regime base_for_t1() {
  Regime r;
  r.t_min = r.t_max = 1;
  r.base_coloring = true;
  return r;
}

Regime explicit_regime(std::size_t t_min, std::size_t t_max,
                       std::map<std::size_t, Names> by_t) {
  Regime r;
  r.t_min = t_min;
  r.t_max = t_max;
  r.explicit_t = std::move(by_t);
  return r;
}

Regime repeating(std::size_t t_min, Names unit,
                 std::map<std::size_t, Names> remainder) {
  Regime r;
  r.t_min = t_min;
  r.t_max = kOpen;
  r.unit = std::move(unit);
  r.remainder = std::move(remainder);
  return r;
}

std::vector<TheoremEntry> build_registry() {
  std::vector<TheoremEntry> out;

  // Cycles C_4s ---------------------------------------------------------------
  out.push_back({
      "C4s-l2",
      "chi_p(P_2t <>_2 C_4s) = 3 (t=1), = 4 (t=2,3), <= 5 (t>=4)",
      BaseKind::cycle, {4, 0, 1}, 2,
      {{1, 1, 3, true}, {2, 3, 4, true}, {4, kOpen, 5, false}},
      {{"a", "b3 1 [2 1 3 1]* 2 b1"},
       {"b", "b4 1 [2 1 3 1]* 2 b1"},
       {"c", "b5 1 [2 1 3 1]* 2 b1"}},
      {repeating(1, {"a", "b", "a", "c"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "a"}}})},
  });
  out.push_back({
      "C4s-l3",
      "chi_p(P_3t <>_3 C_4s) = 3 (t=1), = 4 (t>=2)",
      BaseKind::cycle, {4, 0, 1}, 3,
      {{1, 1, 3, true}, {2, kOpen, 4, true}},
      {{"a", "b2 1 [3 1 2 1]* <(3 1)"},
       {"b", "b1 2 [1 3 1 2]* <(1 4)"},
       {"c", "b3 1 [2 1 3 1]* <(2 1)"},
       {"d", "b1 3 [1 2 1 3]* <(1 4)"}},
      {repeating(1, {"a", "b", "c", "d"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "c"}}})},
  });

  // Cycles C_4s+1 -------------------------------------------------------------
  out.push_back({
      "C5-l2",
      "chi_p(P_2t <>_2 C_5) = 4 (t=1), = 5 (t=2..4), <= 6 (t>=5)",
      BaseKind::cycle, {0, 5, 0}, 2,
      {{1, 1, 4, true}, {2, 4, 5, true}, {5, kOpen, 6, false}},
      {{"a", "b1 3 5 1 b2"},
       {"b", "b1 3 1 2 b4"},
       {"c", "b1 2 3 1 b5"},
       {"d", "b1 3 1 4 b2"},
       {"a'", "b1 3 4 1 b2"},
       {"b'", "b1 3 4 2 b5"},
       {"c'", "b1 3 4 2 b6"}},
      {base_for_t1(),
       explicit_regime(2, 4,
                       {{2, {"a", "b"}},
                        {3, {"a", "b", "c"}},
                        {4, {"a", "b", "c", "d"}}}),
       repeating(5, {"a'", "b'", "a'", "c'"},
                 {{1, {"a'"}}, {2, {"a'", "b'"}}, {3, {"a'", "b'", "a'"}}})},
  });
  out.push_back({
      "C4s+1-l2",
      "chi_p(P_2t <>_2 C_4s+1) = 4 (t=1..3), <= 5 (t>=4), s>=2",
      BaseKind::cycle, {4, 1, 2}, 2,
      {{1, 3, 4, true}, {4, kOpen, 5, false}},
      {{"a", "b1 3 2 1 4 [1 3 1 2]* 1 3 1 b2"},
       {"b", "b1 3 1 2 1 [3 1 2 1]* 3 2 1 b4"},
       {"c", "b1 3 1 2 1 [3 1 2 1]* 3 2 1 b5"}},
      {base_for_t1(),
       explicit_regime(2, 4,
                       {{2, {"a", "b"}},
                        {3, {"a", "b", "a"}},
                        {4, {"a", "b", "a", "c"}}}),
       repeating(5, {"a", "b", "a", "c"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "a"}}})},
  });
  out.push_back({
      "C5-l3",
      "chi_p(P_3t <>_3 C_5) = 4 (t=1), = 5 (t>=2)",
      BaseKind::cycle, {0, 5, 0}, 3,
      {{1, 1, 4, true}, {2, kOpen, 5, true}},
      {{"a", "b1 3 2 <(1 5)"},
       {"b", "b4 3 1 <(2 1)"}},
      // Odd t: the initial part added is the first block.
      {base_for_t1(), repeating(2, {"a", "b"}, {{1, {"a"}}})},
  });
  out.push_back({
      "C4s+1-l3",
      "chi_p(P_3t <>_3 C_4s+1) = 4 (t=1,2), <= 5 (t>=3), s>=2",
      BaseKind::cycle, {4, 1, 2}, 3,
      {{1, 2, 4, true}, {3, kOpen, 5, false}},
      {{"A", "b3 1 4 2 1 3 1 [2 1 3 1]* <(2 1)"},
       {"B", "b1 3 1 2 1 3 [1 2 1 3]* 1 <(2 4)"},
       {"a", "b1 4 2 1 3 1 [2 1 3 1]* 2 <(1 5)"},
       {"b", "b3 1 2 1 3 1 [2 1 3 1]* 4 <(2 1)"},
       {"c", "b1 3 1 2 1 3 [1 2 1 3]* 4 <(1 5)"},
       {"d", "b2 1 3 4 1 2 [1 3 1 2]* 1 <(3 1)"}},
      {base_for_t1(), explicit_regime(2, 2, {{2, {"A", "B"}}}),
       repeating(3, {"a", "b", "c", "d"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "c"}}})},
  });
  out.push_back({
      "C4s+1-l4",
      "chi_p(P_4t <>_4 C_4s+1) <= 5, s>=2 here; s=1 via the cycle transform",
      BaseKind::cycle, {4, 1, 2}, 4,
      {{1, kOpen, 5, false}},
      // Corrected: (a) as printed clashes with the 3 closing (c) in the
      // repeated unit, and (b)'s group [1 2 3 1] puts two 1s side by side.
      {{"a", "b1 2 4 1 2 1 [3 1 2 1]* <(3 1 5)"},
       {"b", "b1 4 1 2 3 1 [2 1 3 1]* <(5 1 2)"},
       {"c", "b1 4 3 1 2 1 [3 1 2 1]* <(3 1 2)"}},
      {explicit_regime(1, 3,
                       {{1, {"c"}}, {2, {"a", "b"}}, {3, {"a", "b", "c"}}}),
       repeating(4, {"a", "b", "c"}, {{1, {"a"}}, {2, {"a", "b"}}})},
  });

  // Cycles C_4s+2 -------------------------------------------------------------
  out.push_back({
      "C4s+2-l2",
      "chi_p(P_2t <>_2 C_4s+2) = 4 (t=1,2), <= 5 (t>=3)",
      BaseKind::cycle, {4, 2, 1}, 2,
      {{1, 2, 4, true}, {3, kOpen, 5, false}},
      // A and A' as printed put the group's last 3 at distance 3 from the
      // closing 3 once s >= 2; here the group comes first.
      {{"A", "b1 [2 1 3 1]* 2 4 1 2 b3"},
       {"B", "b1 4 1 [3 1 2 1]* 3 1 b2"},
       {"A'", "b1 5 [2 1 3 1]* 4 1 2 b3"}},
      {base_for_t1(), explicit_regime(2, 2, {{2, {"A", "B"}}}),
       repeating(3, {"A'", "B"}, {{1, {"A'"}}})},
  });
  out.push_back({
      "C6-l3",
      "chi_p(P_3t <>_3 C_6) = 4 (t=1,2), <= 5 (t>=3)",
      BaseKind::cycle, {0, 6, 0}, 3,
      {{1, 2, 4, true}, {3, kOpen, 5, false}},
      {{"A", "b1 3 1 4 <(1 2)"},
       {"B", "b3 2 1 4 <(2 1)"},
       {"a", "b1 5 1 4 <(1 3)"},
       {"b", "b2 1 5 1 <(3 1)"},
       {"c", "b1 4 1 5 <(1 2)"},
       {"d", "b3 1 4 1 <(2 1)"}},
      {base_for_t1(), explicit_regime(2, 2, {{2, {"A", "B"}}}),
       repeating(3, {"a", "b", "c", "d"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "c"}}})},
  });
  out.push_back({
      "C4s+2-l3",
      "chi_p(P_3t <>_3 C_4s+2) = 4 (t=1..3), <= 5 (t>=4), s>=2",
      BaseKind::cycle, {4, 2, 2}, 3,
      {{1, 3, 4, true}, {4, kOpen, 5, false}},
      {{"x", "b1 3 1 2 1 3 [1 2 1 3]* 1 4 <(1 2)"},
       {"y", "b3 2 1 4 1 2 3 1 [2 1 3 1]* <(2 1)"},
       {"z", "b1 4 1 2 1 3 [1 2 1 3]* 1 2 <(1 3)"},
       {"a", "b1 5 1 3 1 2 [1 3 1 2]* 1 4 <(1 3)"},
       {"b", "b2 1 3 1 2 1 [3 1 2 1]* 5 1 <(3 1)"},
       {"c", "b1 4 1 2 1 3 [1 2 1 3]* 1 5 <(1 2)"},
       {"d", "b3 1 2 1 3 [1 2 1 3]* 1 4 1 <(2 1)"}},
      {explicit_regime(1, 3,
                       {{1, {"x"}}, {2, {"x", "y"}}, {3, {"x", "y", "z"}}}),
       repeating(4, {"a", "b", "c", "d"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "c"}}})},
  });

  // Cycles C_4s+3 -------------------------------------------------------------
  out.push_back({
      "C3-l2",
      "chi_p(P_2t <>_2 C_3) = 3 (t=1), = 4 (t=2,3), <= 5 (t>=4)",
      BaseKind::cycle, {0, 3, 0}, 2,
      {{1, 1, 3, true}, {2, 3, 4, true}, {4, kOpen, 5, false}},
      {{"a", "b3 2 b1"}, {"b", "b4 2 b1"}, {"c", "b5 2 b1"}},
      {repeating(1, {"a", "b", "a", "c"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "a"}}})},
  });
  out.push_back({
      "C4s+3-l2",
      "chi_p(P_2t <>_2 C_4s+3) = 4 (t=1,2), <= 5 (t>=3)",
      BaseKind::cycle, {4, 3, 1}, 2,
      {{1, 2, 4, true}, {3, kOpen, 5, false}},
      {{"A", "b1 2 4 [1 2 1 3]* 1 2 1 b3"},
       {"B", "b1 4 2 [1 3 1 2]* 1 3 1 b2"},
       {"A'", "b1 5 4 [1 2 1 3]* 1 2 1 b3"}},
      {base_for_t1(), explicit_regime(2, 2, {{2, {"A", "B"}}}),
       repeating(3, {"A'", "B"}, {{1, {"A'"}}})},
  });
  out.push_back({
      "C3-l3",
      "chi_p(P_3t <>_3 C_3) = 3 (t=1), = 4 (t=2,3), <= 5 (t>=4)",
      BaseKind::cycle, {0, 3, 0}, 3,
      {{1, 1, 3, true}, {2, 3, 4, true}, {4, kOpen, 5, false}},
      {{"a", "b3 <(1 2)"}, {"b", "b4 <(1 2)"}, {"c", "b5 <(1 2)"}},
      {explicit_regime(1, 3,
                       {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "a"}}}),
       repeating(4, {"a", "b", "a", "c"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "a"}}})},
  });
  out.push_back({
      "C4s+3-l3",
      "chi_p(P_3t <>_3 C_4s+3) = 4 (t=1,2), <= 5 (t>=3)",
      BaseKind::cycle, {4, 3, 1}, 3,
      {{1, 2, 4, true}, {3, kOpen, 5, false}},
      {{"A", "b2 4 [1 2 1 3]* 1 2 1 <(3 1)"},
       {"B", "b1 4 [2 1 3 1]* 2 1 3 <(1 2)"},
       {"B'", "b1 4 [2 1 3 1]* 2 1 3 <(1 5)"}},
      {explicit_regime(1, 2, {{1, {"A"}}, {2, {"A", "B"}}}),
       repeating(3, {"A", "B'"}, {{1, {"A"}}})},
  });

  // Complete graphs -----------------------------------------------------------
  out.push_back({
      "K3-l2",
      "chi_p(P_2t <>_l K_3) = 3 (t=1), = 4 (t=2,3), <= 5 (t>=4), l in {2,3}",
      BaseKind::complete, {0, 3, 0}, 2,
      {{1, 1, 3, true}, {2, 3, 4, true}, {4, kOpen, 5, false}},
      {{"a", "b3 2 b1"}, {"b", "b4 2 b1"}, {"c", "b5 2 b1"}},
      {repeating(1, {"a", "b", "a", "c"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "a"}}})},
  });
  out.push_back({
      "K4-l2",
      "chi_p(P_2t <>_l K_4) = 4 (t=1), = 6 (t=2,3), <= 8 (t>=4), 2<=l<=4",
      BaseKind::complete, {0, 4, 0}, 2,
      {{1, 1, 4, true}, {2, 3, 6, true}, {4, kOpen, 8, false}},
      {{"a", "b3 2 4 b1"}, {"b", "b5 2 6 b1"}, {"c", "b7 2 8 b1"}},
      {repeating(1, {"a", "b", "a", "c"},
                 {{1, {"a"}}, {2, {"a", "b"}}, {3, {"a", "b", "a"}}})},
  });
  out.push_back({
      "K5-l2",
      "chi_p(P_lt <>_l K_5) <= 14, 2<=l<=5",
      BaseKind::complete, {0, 5, 0}, 2,
      {{1, kOpen, 14, false}},
      {{"a", "b5 2 3 10 b1"},
       {"b", "b9 2 4 11 b1"},
       {"c", "b3 2 6 8 b1"},
       {"d", "b7 1 2 4 b5"},
       {"e", "b1 2 12 13 b3"},
       {"f", "b1 2 4 6 b10"},
       {"g", "b1 2 5 8 b3"},
       {"h", "b11 2 4 7 b1"},
       {"i", "b9 2 3 6 b1"},
       {"j", "b5 2 4 14 b1"},
       {"k", "b3 2 8 12 b1"},
       {"l", "b7 2 4 6 b1"}},
      // Remainders as listed; the entries for 9, 10 and 11 hold one block
      // more than the residue and are re-derived as unit prefixes.
      {repeating(1, {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"},
                 {{1, {"a"}},
                  {2, {"a", "b"}},
                  {3, {"a", "b", "c"}},
                  {4, {"a", "b", "c", "d"}},
                  {5, {"a", "b", "c", "d", "e"}},
                  {6, {"a", "b", "c", "d", "e", "f"}},
                  {7, {"a", "b", "c", "d", "e", "f", "g"}},
                  {8, {"a", "b", "c", "d", "e", "f", "g", "h"}},
                  {9, {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"}},
                  {10, {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"}},
                  {11, {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k",
                        "l"}}})},
  });
  return out;
}

}  // namespace

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> entries = build_registry();
  return entries;
}

const TheoremEntry& registry_entry(std::string_view key) {
  for (const auto& e : registry()) {
    if (e.key == key) return e;
  }
  throw Error(ErrorKind::unsupported, "no registry entry '" + std::string(key) + "'");
}

}  // namespace pathpack
