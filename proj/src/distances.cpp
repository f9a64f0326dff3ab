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

#include "pathpack/distances.hpp"

#include <algorithm>
#include <limits>

#include "pathpack/error.hpp"

namespace pathpack {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::uint32_t> dist)
    : n_(n), dist_(std::move(dist)) {
  if (dist_.size() != n_ * n_) {
    throw Error(ErrorKind::invalid_input, "distance matrix size mismatch");
  }
  if (!dist_.empty()) diameter_ = *std::max_element(dist_.begin(), dist_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> dist(n * n, kUnreached);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::uint32_t* row = dist.data() + static_cast<std::size_t>(s) * n;
    std::size_t head = 0, tail = 0;
    row[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex v = queue[head++];
      for (Vertex w : g.neighbors(v)) {
        if (row[w] == kUnreached) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      Vertex missing = 0;
      while (row[missing] != kUnreached) ++missing;
      throw Error(ErrorKind::disconnected_graph,
                  "vertices " + std::to_string(s + 1) + " and " +
                      std::to_string(missing + 1) + " are not connected");
    }
  }
  return DistanceMatrix(n, std::move(dist));
}

}  // namespace pathpack
