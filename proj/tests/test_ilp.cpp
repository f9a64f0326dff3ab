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

#include <memory>
#include <sstream>

#include "oracles.hpp"
#include "pathpack/constructions.hpp"
#include "pathpack/distances.hpp"
#include "pathpack/ilp.hpp"
#include "pathpack/packing.hpp"

using namespace pathpack;

namespace {

IlpModel model_of(const Graph& g, int k) { return build_model(all_pairs_distances(g), k); }

std::string lp_text(const IlpModel& m) {
  std::ostringstream out;
  write_lp(m, out);
  return out.str();
}

IlpSolution read(const std::string& text, const IlpModel& m) {
  std::istringstream in(text);
  return read_solution(in, m);
}

// Solution file for a coloring with z = max color.
std::string solution_file(const std::vector<int>& colors, int k) {
  std::ostringstream out;
  out << "# objective " << oracle::max_color(colors) << '\n';
  for (std::size_t v = 0; v < colors.size(); ++v)
    for (int i = 1; i <= k; ++i)
      out << "x_" << v + 1 << '_' << i << ' ' << (colors[v] == i ? 1 : 0) << '\n';
  out << "z " << oracle::max_color(colors) << '\n';
  return out.str();
}

std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= 12; n += 2) out.push_back(build_path(n));
  for (std::size_t n = 3; n <= 12; n += 1) out.push_back(build_cycle(n));
  for (std::size_t n = 3; n <= 6; ++n) out.push_back(build_complete(n));
  out.push_back(path_aligned_product({BaseKind::cycle, 4, 2, 3}));
  out.push_back(path_aligned_product({BaseKind::cycle, 5, 2, 2}));
  out.push_back(path_aligned_product({BaseKind::complete, 4, 2, 3}));
  out.push_back(path_aligned_product({BaseKind::complete, 5, 3, 2}));
  out.push_back(caterpillar({{2, 0, 3, 0, 1}}));
  out.push_back(corona(build_path(4), 2));
  return out;
}

// Independent closed-form count: pairs at distance d give max(0, k - d + 1).
std::size_t separation_closed_form(const Graph& g, int k) {
  const auto d = oracle::floyd_warshall(g);
  std::size_t count = 0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (d[u][v] <= static_cast<std::uint32_t>(k)) count += k - d[u][v] + 1;
  return count;
}

}  // namespace

TEST_CASE("P2 model matches the golden file") {
  const IlpModel m = model_of(build_path(2), 2);
  CHECK(m.assignment_count() == 2);
  CHECK(m.bound_count() == 4);
  CHECK(m.separation_count() == 2);
  CHECK(lp_text(m) == oracle::slurp(PATHPACK_GOLDEN_DIR "/P2_k2.lp"));
}

TEST_CASE("counts follow closed forms") {
  for (const Graph& g : corpus()) {
    for (int k = 1; k <= 7; ++k) {
      const IlpModel m = model_of(g, k);
      const std::size_t n = g.vertex_count();
      CHECK(m.variable_count() == n * k + 1);
      CHECK(m.assignment_count() == n);
      CHECK(m.bound_count() == n * k);
      CHECK(m.separation_count() == separation_closed_form(g, k));
      std::size_t seen = 0;
      m.for_each_separation([&](Vertex, Vertex, int) { ++seen; });
      CHECK(seen == m.separation_count());
    }
  }
  CHECK(model_of(path_aligned_product({BaseKind::complete, 4, 2, 2}), 6).variable_count() == 49);
  CHECK(model_of(path_aligned_product({BaseKind::complete, 4, 2, 3}), 6).variable_count() ==
        12 * 6 + 1);
}

TEST_CASE("separation ranges") {
  const IlpModel m = model_of(build_path(3), 3);
  std::vector<int> far;
  std::vector<std::tuple<Vertex, Vertex, int>> order;
  m.for_each_separation([&](Vertex u, Vertex v, int i) {
    order.emplace_back(u, v, i);
    if (u == 0 && v == 2) far.push_back(i);
  });
  CHECK(far == std::vector<int>{2, 3});
  CHECK(std::is_sorted(order.begin(), order.end()));
  CHECK(oracle::error_kind([] { model_of(build_path(3), 0); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("LP output is byte-stable") {
  const Graph g = path_aligned_product({BaseKind::complete, 4, 2, 3});
  const auto dir = std::filesystem::temp_directory_path();
  write_lp(model_of(g, 6), dir / "pathpack_a.lp");
  write_lp(model_of(g, 6), dir / "pathpack_b.lp");
  const std::string a = oracle::slurp(dir / "pathpack_a.lp");
  CHECK(!a.empty());
  CHECK(a == oracle::slurp(dir / "pathpack_b.lp"));
  CHECK(a == lp_text(model_of(g, 6)));
  std::filesystem::remove(dir / "pathpack_a.lp");
  std::filesystem::remove(dir / "pathpack_b.lp");
}

TEST_CASE("reading solutions") {
  const Graph c5 = build_cycle(5);
  const IlpModel m = model_of(c5, 4);
  const IlpSolution s = read(solution_file({1, 2, 1, 3, 4}, 4), m);
  CHECK(s.objective == doctest::Approx(4));
  CHECK(s.coloring.colors == std::vector<int>{1, 2, 1, 3, 4});
  CHECK(oracle::packing_valid(oracle::floyd_warshall(c5), s.coloring.colors));

  // Tolerance on binaries.
  std::string near = solution_file({1, 2, 1, 3, 4}, 4);
  near.replace(near.find("x_1_1 1"), 7, "x_1_1 0.9999999");
  CHECK(read(near, m).coloring.colors[0] == 1);

  std::string frac = solution_file({1, 2, 1, 3, 4}, 4);
  frac.replace(frac.find("x_1_1 1"), 7, "x_1_1 0.5");
  CHECK(oracle::error_kind([&] { read(frac, m); }) == ErrorKind::not_integral);

  std::string two = solution_file({1, 2, 1, 3, 4}, 4);
  two.replace(two.find("x_1_2 0"), 7, "x_1_2 1");
  CHECK(oracle::error_kind([&] { read(two, m); }) == ErrorKind::incomplete_solution);

  CHECK(oracle::error_kind([&] { read("x_1_1 1\nz 1\n", m); }) ==
        ErrorKind::incomplete_solution);
  CHECK(oracle::error_kind([&] { read("y_1 1\n", m); }) == ErrorKind::parse_error);
  CHECK(oracle::error_kind([&] { read("x_9_1 1\n", m); }) == ErrorKind::invalid_input);
}

TEST_CASE("solution round trip on the K4 product") {
  const Graph g = path_aligned_product({BaseKind::complete, 4, 2, 3});
  const DistanceMatrix dm = all_pairs_distances(g);
  const auto best = exact_chi_p(g, dm);
  REQUIRE(best.chi_p == 6);
  const IlpModel m = build_model(dm, 6);
  const IlpSolution s = read(solution_file(best.witness.colors, 6), m);
  CHECK(s.objective == doctest::Approx(6));
  CHECK(is_valid(g, dm, s.coloring));
  CHECK(m.satisfied_by(s.coloring, s.objective));
}

TEST_CASE("model feasibility threshold equals the packing number") {
  std::size_t graphs = 0;
  for (const Graph& g : corpus()) {
    if (g.vertex_count() > 12) continue;
    ++graphs;
    const DistanceMatrix dm = all_pairs_distances(g);
    const int truth = oracle::backtrack_chi_p(g);
    int threshold = 0;
    for (int k = 1; k <= static_cast<int>(g.vertex_count()) && !threshold; ++k) {
      const IlpModel m = build_model(dm, k);
      const auto f = find_packing_coloring(g, dm, k, 50'000'000);
      REQUIRE(f.status != Feasibility::limit_hit);
      if (f.status == Feasibility::feasible) {
        CHECK(m.satisfied_by(f.coloring, f.coloring.k_used()));
        threshold = k;
      }
    }
    CHECK(threshold == truth);
  }
  CHECK(graphs >= 20);
}

TEST_CASE("model constraints and packing validity agree") {
  std::mt19937 rng(3);
  for (const Graph& g : corpus()) {
    const auto d = oracle::floyd_warshall(g);
    const IlpModel m = model_of(g, 4);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> c(g.vertex_count());
      for (auto& x : c) x = 1 + static_cast<int>(rng() % 4);
      CHECK(m.satisfied_by({c}, oracle::max_color(c)) == oracle::packing_valid(d, c));
    }
  }
}

TEST_CASE("large models are written") {
  const IlpModel m = model_of(build_path(400), 60);
  std::ostringstream sink;
  write_lp(m, sink);
  CHECK(m.separation_count() > 20'000);
  CHECK(sink.str().rfind("End\n") == sink.str().size() - 4);
}
