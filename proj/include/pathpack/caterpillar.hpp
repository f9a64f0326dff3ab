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
#include <optional>
#include <string>
#include <vector>

#include "pathpack/constructions.hpp"
#include "pathpack/packing.hpp"

namespace pathpack {

/// The seven caterpillar families with packing chromatic number 3.
enum class Family { G1 = 1, G2, G3, G4, G5, G6, G7 };

std::string to_string(Family family);

struct FamilyMatch {
  Family family = Family::G1;
  std::size_t k = 0;
  bool reversed = false;      // matched against the reversed leaf sequence
  CaterpillarSpec matched;    // the spec in the matched orientation
};

/// Every family matched by `spec` or its reversal, forward orientation
/// first, families in order. Throws non-canonical-spec.
std::vector<FamilyMatch> match_families(const CaterpillarSpec& spec);

/// 3-coloring of caterpillar(original spec) from a match. Vertex numbering
/// follows `caterpillar()` on the unreversed spec.
PackingColoring certificate_3_coloring(const FamilyMatch& match);

/// Leaves colored 1, backbone colored by a search over path packings that
/// keeps color 1 off backbone vertices carrying leaves. Smallest such k up
/// to `k_max`; nullopt when none exists. An upper bound only.
std::optional<PackingColoring> leaf_one_coloring(const CaterpillarSpec& spec,
                                                 int k_max = 7);

struct ChiClass {
  /// 1, 2 or 3; 0 means "more than 3".
  int value = 0;
  std::optional<PackingColoring> certificate;  // set when value <= 3
  std::vector<FamilyMatch> matches;

  // Only for value 0:
  int upper_note = 0;                   // 6 for l <= 34, else 7
  std::optional<int> exact;             // when the solver finished
  std::optional<PackingColoring> witness;  // best coloring found

  bool more() const { return value == 0; }
};

/// `exact_node_limit` bounds the solver run attached to "more" results; 0
/// skips it.
ChiClass classify_chi_p(const CaterpillarSpec& spec,
                        std::uint64_t exact_node_limit = 5'000'000);

struct Disagreement {
  CaterpillarSpec spec;
  bool recognized = false;  // some family matched
  int exact = 0;            // solver value, 0 if the solver gave up
  std::string detail;
};

struct CrosscheckReport {
  std::size_t checked = 0;
  std::size_t recognized = 0;
  std::size_t certificates_checked = 0;
  std::vector<Disagreement> disagreements;
  bool partial = false;
};

/// Every canonical spec with 1 <= l <= l_max and leaves in [0, m_max], one
/// orientation each: recognition says 3 exactly when the exact solver does,
/// and every certificate validates with exactly 3 colors.
CrosscheckReport enumerate_and_crosscheck(std::size_t l_max, std::size_t m_max,
                                          unsigned jobs = 1,
                                          std::uint64_t node_limit = 50'000'000);

}  // namespace pathpack
