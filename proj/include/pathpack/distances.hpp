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
#include <vector>

#include "pathpack/graph.hpp"

namespace pathpack {

/// Dense all-pairs shortest-path edge counts of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> dist);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::uint32_t diameter() const noexcept { return diameter_; }
  const std::vector<std::uint32_t>& raw() const noexcept { return dist_; }

  friend bool operator==(const DistanceMatrix&,
                         const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
  std::uint32_t diameter_ = 0;
};

/// One breadth-first search per vertex. Throws disconnected-graph naming an
/// unreachable pair.
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace pathpack
