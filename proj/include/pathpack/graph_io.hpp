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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pathpack/graph.hpp"

namespace pathpack {

// Edge-list format, 1-based:
//   p <n> <m>
//   e <u> <v>      (m lines)
//   l <v> <tag>    (optional)
//   c <comment>    (ignored)

Graph parse_graph(std::istream& in);
void format_graph(const Graph& g, std::ostream& out);

Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace pathpack
