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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pathpack/caterpillar.hpp"
#include "pathpack/distances.hpp"
#include "pathpack/packing.hpp"

using namespace pathpack;

namespace {

bool has_family(const std::vector<FamilyMatch>& ms, Family f, std::size_t k) {
  for (const auto& m : ms)
    if (m.family == f && m.k == k) return true;
  return false;
}

bool valid_by_oracle(const CaterpillarSpec& spec, const std::vector<int>& colors) {
  return oracle::packing_valid(oracle::floyd_warshall(caterpillar(spec)), colors);
}

std::vector<int> backbone(const PackingColoring& c, std::size_t l) {
  return {c.colors.begin(), c.colors.begin() + static_cast<std::ptrdiff_t>(l)};
}

// Canonical specs with l <= l_max and m_i <= m_max, in odometer order.
template <class Fn>
void for_each_canonical(std::size_t l_max, std::size_t m_max, Fn fn) {
  for (std::size_t l = 1; l <= l_max; ++l) {
    std::vector<std::size_t> m(l, 0);
    while (true) {
      const CaterpillarSpec spec{m};
      if (is_canonical(spec)) fn(spec);
      std::size_t i = 0;
      while (i < l && m[i] == m_max) m[i++] = 0;
      if (i == l) break;
      ++m[i];
    }
  }
}

}  // namespace

TEST_CASE("family matching examples") {
  CHECK(has_family(match_families({{2, 1, 0, 3, 0, 1}}), Family::G4, 1));
  CHECK(has_family(match_families({{5, 2, 1}}), Family::G6, 0));
  CHECK(has_family(match_families({{1, 1}}), Family::G4, 0));
  CHECK(match_families({{1, 1, 1, 1}}).empty());
  CHECK(has_family(match_families({{3, 2, 0, 1}}), Family::G1, 1));
  CHECK(has_family(match_families({{2, 0, 3, 0, 1}}), Family::G3, 1));
  CHECK(oracle::error_kind([] { match_families({{0, 1, 1}}); }) ==
        ErrorKind::non_canonical_spec);
}

TEST_CASE("certificate examples") {
  {
    const auto ms = match_families({{1, 1}});
    REQUIRE_FALSE(ms.empty());
    const auto c = certificate_3_coloring(ms.front());
    CHECK(c.k_used() == 3);
    CHECK(valid_by_oracle({{1, 1}}, c.colors));
  }
  {
    const CaterpillarSpec spec{{2, 1, 1}};
    const auto ms = match_families(spec);
    REQUIRE(has_family(ms, Family::G6, 0));
    for (const auto& m : ms) {
      if (m.family != Family::G6) continue;
      const auto c = certificate_3_coloring(m);
      CHECK(backbone(c, 3) == std::vector<int>{2, 3, 1});
      CHECK(c.colors[6] == 2);  // the single leaf of the third backbone vertex
      CHECK(valid_by_oracle(spec, c.colors));
    }
  }
  {
    const CaterpillarSpec spec{{2, 0, 3, 0, 1}};
    for (const auto& m : match_families(spec)) {
      if (m.family != Family::G3) continue;
      const auto c = certificate_3_coloring(m);
      CHECK(backbone(c, 5) == std::vector<int>{3, 1, 2, 1, 3});
      CHECK(c.k_used() == 3);
      CHECK(valid_by_oracle(spec, c.colors));
    }
  }
}

TEST_CASE("classification examples") {
  const ChiClass star = classify_chi_p({{7}});
  CHECK(star.value == 2);
  REQUIRE(star.certificate);
  CHECK(valid_by_oracle({{7}}, star.certificate->colors));

  const ChiClass more = classify_chi_p({{1, 1, 1, 1}});
  CHECK(more.more());
  REQUIRE(more.exact);
  CHECK(*more.exact == 4);
  CHECK(*more.exact == oracle::backtrack_chi_p(caterpillar({{1, 1, 1, 1}})));
  CHECK(more.upper_note == 6);

  const ChiClass g1 = classify_chi_p({{3, 2, 0, 1}});
  CHECK(g1.value == 3);
  CHECK(has_family(g1.matches, Family::G1, 1));

  CHECK(classify_chi_p({{0}}).value == 1);
  CHECK(classify_chi_p({{1}}).value == 2);
}

TEST_CASE("certificates are sound on the exhaustive range") {
  std::size_t certified = 0;
  for_each_canonical(7, 2, [&](const CaterpillarSpec& spec) {
    for (const auto& m : match_families(spec)) {
      const auto c = certificate_3_coloring(m);
      CHECK(c.k_used() == 3);
      CHECK(valid_by_oracle(spec, c.colors));
      ++certified;
    }
  });
  CHECK(certified > 100);
}

TEST_CASE("classification agrees with the backtracking oracle") {
  for_each_canonical(6, 2, [&](const CaterpillarSpec& spec) {
    CAPTURE(to_string(spec));
    const ChiClass cls = classify_chi_p(spec);
    const int truth = oracle::backtrack_chi_p(caterpillar(spec));
    if (cls.more()) {
      CHECK(truth >= 4);
      REQUIRE(cls.exact);
      CHECK(*cls.exact == truth);
    } else {
      CHECK(cls.value == truth);
    }
    // Reversal gives the same value.
    const ChiClass rev = classify_chi_p(spec.reversed());
    CHECK(rev.value == cls.value);
    if (spec.length() >= 2) CHECK((cls.more() || cls.value >= 3));
  });
}

TEST_CASE("all-leaves-one colorings") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t l = 2 + rng() % 19;
    std::vector<std::size_t> m(l);
    for (auto& x : m) x = rng() % 4;
    m.front() = std::max<std::size_t>(m.front(), 1);
    m.back() = std::max<std::size_t>(m.back(), 1);
    const CaterpillarSpec spec{m};
    const auto c = leaf_one_coloring(spec);
    REQUIRE(c);
    CHECK(c->k_used() <= 6);
    CHECK(valid_by_oracle(spec, c->colors));
    for (std::size_t v = l; v < c->colors.size(); ++v) CHECK(c->colors[v] == 1);
  }
}

TEST_CASE("crosscheck harness") {
  const auto small = enumerate_and_crosscheck(4, 1);
  CHECK(small.disagreements.empty());
  CHECK_FALSE(small.partial);
  CHECK(small.checked > 0);

  const auto stars = enumerate_and_crosscheck(1, 2);
  CHECK(stars.recognized == 0);
  CHECK(stars.disagreements.empty());

  const auto seq = enumerate_and_crosscheck(6, 2, 1);
  const auto par = enumerate_and_crosscheck(6, 2, 3);
  CHECK(seq.checked == par.checked);
  CHECK(seq.recognized == par.recognized);
  CHECK(seq.certificates_checked == par.certificates_checked);
  CHECK(par.disagreements.empty());
}
