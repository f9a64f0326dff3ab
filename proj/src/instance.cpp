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

#include "pathpack/instance.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "pathpack/error.hpp"

namespace pathpack {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& what) {
  throw Error(ErrorKind::parse_error,
              "instance '" + std::string(text) + "': " + what +
                  " (forms: path:N, cycle:N, complete:N, product cycle|complete "
                  "n=N l=L t=T, caterpillar L:m1,...,mL, corona BASE p=P)");
}

std::size_t number(std::string_view text, std::string_view token) {
  std::size_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    fail(text, "'" + std::string(token) + "' is not a non-negative integer");
  }
  return value;
}

std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

BasicSpec basic(std::string_view text, std::string_view word) {
  const auto colon = word.find(':');
  if (colon == std::string_view::npos) fail(text, "expected KIND:N");
  const std::string_view kind = word.substr(0, colon);
  BasicSpec spec;
  if (kind == "path") {
    spec.kind = BasicSpec::Kind::path;
  } else if (kind == "cycle") {
    spec.kind = BasicSpec::Kind::cycle;
  } else if (kind == "complete") {
    spec.kind = BasicSpec::Kind::complete;
  } else {
    fail(text, "unknown graph kind '" + std::string(kind) + "'");
  }
  spec.n = number(text, word.substr(colon + 1));
  return spec;
}

std::map<std::string, std::size_t> assignments(std::string_view text,
                                               const std::vector<std::string>& ws,
                                               std::size_t from) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = from; i < ws.size(); ++i) {
    const auto eq = ws[i].find('=');
    if (eq == std::string::npos) fail(text, "expected key=value, got '" + ws[i] + "'");
    const std::string key = ws[i].substr(0, eq);
    if (out.count(key)) fail(text, "'" + key + "' given twice");
    out[key] = number(text, std::string_view(ws[i]).substr(eq + 1));
  }
  return out;
}

std::string basic_string(const BasicSpec& b) {
  switch (b.kind) {
    case BasicSpec::Kind::path: return "path:" + std::to_string(b.n);
    case BasicSpec::Kind::cycle: return "cycle:" + std::to_string(b.n);
    case BasicSpec::Kind::complete: return "complete:" + std::to_string(b.n);
  }
  return "?";
}

Graph build_basic(const BasicSpec& b) {
  switch (b.kind) {
    case BasicSpec::Kind::path: return build_path(b.n);
    case BasicSpec::Kind::cycle: return build_cycle(b.n);
    case BasicSpec::Kind::complete: return build_complete(b.n);
  }
  throw Error(ErrorKind::invalid_parameter, "unknown graph kind");
}

}  // namespace

InstanceSpec parse_instance(std::string_view text) {
  const auto ws = words(text);
  if (ws.empty()) fail(text, "empty");
  const std::string& head = ws[0];

  if (head == "product") {
    if (ws.size() < 2) fail(text, "missing base kind");
    ProductSpec spec;
    if (ws[1] == "cycle") {
      spec.base = BaseKind::cycle;
    } else if (ws[1] == "complete") {
      spec.base = BaseKind::complete;
    } else {
      fail(text, "product base must be cycle or complete");
    }
    auto kv = assignments(text, ws, 2);
    for (const char* key : {"n", "l", "t"}) {
      if (!kv.count(key)) fail(text, std::string("missing ") + key + "=");
    }
    if (kv.size() != 3) fail(text, "only n=, l= and t= are allowed");
    spec.n = kv["n"];
    spec.overlap = kv["l"];
    spec.copies = kv["t"];
    return spec;
  }
  if (head == "caterpillar") {
    if (ws.size() != 2) fail(text, "expected caterpillar L:m1,...,mL");
    const std::string& body = ws[1];
    const auto colon = body.find(':');
    if (colon == std::string::npos) fail(text, "expected L:m1,...,mL");
    const std::size_t l = number(text, std::string_view(body).substr(0, colon));
    CaterpillarSpec spec;
    std::string_view rest = std::string_view(body).substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      spec.leaves.push_back(number(text, rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (spec.leaves.size() != l) {
      fail(text, "length " + std::to_string(l) + " but " +
                     std::to_string(spec.leaves.size()) + " leaf counts");
    }
    return spec;
  }
  if (head == "corona") {
    if (ws.size() != 3) fail(text, "expected corona BASE p=P");
    CoronaSpec spec;
    spec.base = basic(text, ws[1]);
    auto kv = assignments(text, ws, 2);
    if (!kv.count("p") || kv.size() != 1) fail(text, "expected p=P");
    spec.p = kv["p"];
    return spec;
  }
  if (ws.size() != 1) fail(text, "unexpected trailing words");
  return basic(text, head);
}

std::string to_string(const InstanceSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BasicSpec>) {
          return basic_string(s);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return to_string(s);
        } else if constexpr (std::is_same_v<T, CaterpillarSpec>) {
          return to_string(s);
        } else {
          return basic_string(s.base) + " o " + std::to_string(s.p) + "K_1";
        }
      },
      spec);
}

Graph build_instance(const InstanceSpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BasicSpec>) {
          return build_basic(s);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return path_aligned_product(s);
        } else if constexpr (std::is_same_v<T, CaterpillarSpec>) {
          return caterpillar(s);
        } else {
          return corona(build_basic(s.base), s.p);
        }
      },
      spec);
}

}  // namespace pathpack
