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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>

#include "pathpack/distances.hpp"
#include "pathpack/packing.hpp"

namespace pathpack {

/// Packing coloring as a 0/1 program with colors 1..k:
///   minimize z
///   sum_i x_{v,i} = 1                          for every v      (assignment)
///   x_{u,i} + x_{v,i} <= 1    for u < v, dist(u,v) <= i <= k     (separation)
///   i * x_{v,i} - z <= 0                        for every v, i   (bound)
///   x binary, z >= 1 continuous.
/// Constraints are generated on demand from the distance table.
class IlpModel {
 public:
  IlpModel(std::shared_ptr<const DistanceMatrix> dm, int k);

  std::size_t vertex_count() const { return dm_->size(); }
  int k() const { return k_; }
  const DistanceMatrix& distances() const { return *dm_; }

  std::size_t variable_count() const { return vertex_count() * k_ + 1; }
  std::size_t assignment_count() const { return vertex_count(); }
  std::size_t bound_count() const { return vertex_count() * k_; }
  std::size_t separation_count() const { return separation_count_; }

  /// (u, v, i) with u < v, in lexicographic order. 0-based vertices.
  void for_each_separation(
      const std::function<void(Vertex, Vertex, int)>& fn) const;

  /// Whether the 0/1 assignment "v gets colors[v]" with objective z meets
  /// every constraint.
  bool satisfied_by(const PackingColoring& coloring, double z) const;

 private:
  std::shared_ptr<const DistanceMatrix> dm_;
  int k_;
  std::size_t separation_count_ = 0;
};

/// Throws invalid-parameter for k < 1.
IlpModel build_model(const DistanceMatrix& dm, int k);

/// CPLEX LP text. Variables x_<v>_<i> (1-based v) and z. Same model, same
/// bytes.
void write_lp(const IlpModel& model, std::ostream& out);
void write_lp(const IlpModel& model, const std::filesystem::path& path);

struct IlpSolution {
  PackingColoring coloring;
  double objective = 0;
};

/// `name value` per line; '#' starts a comment. Binaries within 1e-6 of 0 or
/// 1 are rounded. Errors: not-integral, incomplete-solution (a vertex with
/// no color or two colors, or no z), parse-error for unknown names.
IlpSolution read_solution(std::istream& in, const IlpModel& model);
IlpSolution read_solution(const std::filesystem::path& path,
                          const IlpModel& model);

}  // namespace pathpack
