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

#include <string>
#include <string_view>
#include <variant>

#include "pathpack/constructions.hpp"

namespace pathpack {

/// path:n, cycle:n or complete:n.
struct BasicSpec {
  enum class Kind { path, cycle, complete };
  Kind kind = Kind::path;
  std::size_t n = 1;
};

struct CoronaSpec {
  BasicSpec base;
  std::size_t p = 1;
};

using InstanceSpec = std::variant<BasicSpec, ProductSpec, CaterpillarSpec, CoronaSpec>;

/// Accepted forms:
///   path:5 | cycle:5 | complete:5
///   product cycle n=8 l=3 t=5        (also "product complete ...")
///   caterpillar 4:4,1,0,1
///   corona path:5 p=2
/// Throws parse-error.
InstanceSpec parse_instance(std::string_view text);

std::string to_string(const InstanceSpec& spec);

Graph build_instance(const InstanceSpec& spec);

}  // namespace pathpack
