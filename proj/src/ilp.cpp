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

#include "pathpack/ilp.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "pathpack/error.hpp"

namespace pathpack {

IlpModel::IlpModel(std::shared_ptr<const DistanceMatrix> dm, int k)
    : dm_(std::move(dm)), k_(k) {
  if (k_ < 1) throw Error(ErrorKind::invalid_parameter, "k must be >= 1");
  const std::size_t n = dm_->size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto d = (*dm_)(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (d <= static_cast<std::uint32_t>(k_)) separation_count_ += k_ - d + 1;
    }
  }
}

void IlpModel::for_each_separation(
    const std::function<void(Vertex, Vertex, int)>& fn) const {
  const std::size_t n = vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = static_cast<int>((*dm_)(u, v));
      for (int i = std::max(d, 1); i <= k_; ++i) fn(u, v, i);
    }
  }
}

bool IlpModel::satisfied_by(const PackingColoring& coloring, double z) const {
  const std::size_t n = vertex_count();
  if (coloring.colors.size() != n || z < 1) return false;
  for (int c : coloring.colors) {
    if (c < 1 || c > k_ || c > z) return false;
  }
  bool ok = true;
  for_each_separation([&](Vertex u, Vertex v, int i) {
    if (coloring.colors[u] == i && coloring.colors[v] == i) ok = false;
  });
  return ok;
}

IlpModel build_model(const DistanceMatrix& dm, int k) {
  return IlpModel(std::make_shared<const DistanceMatrix>(dm), k);
}

namespace {

std::string x(std::size_t v, int i) {
  return "x_" + std::to_string(v + 1) + "_" + std::to_string(i);
}

}  // namespace

void write_lp(const IlpModel& model, std::ostream& out) {
  const std::size_t n = model.vertex_count();
  const int k = model.k();
  out << "\\ packing coloring, " << n << " vertices, k = " << k << "\n";
  out << "Minimize\n obj: z\n";
  out << "Subject To\n";
  for (std::size_t v = 0; v < n; ++v) {
    out << " assign_" << v + 1 << ":";
    for (int i = 1; i <= k; ++i) out << (i == 1 ? " " : " + ") << x(v, i);
    out << " = 1\n";
  }
  model.for_each_separation([&](Vertex u, Vertex v, int i) {
    out << " sep_" << u + 1 << '_' << v + 1 << '_' << i << ": " << x(u, i)
        << " + " << x(v, i) << " <= 1\n";
  });
  for (std::size_t v = 0; v < n; ++v) {
    for (int i = 1; i <= k; ++i) {
      out << " bound_" << v + 1 << '_' << i << ": " << i << ' ' << x(v, i)
          << " - z <= 0\n";
    }
  }
  out << "Bounds\n z >= 1\n";
  out << "Binary\n";
  for (std::size_t v = 0; v < n; ++v) {
    for (int i = 1; i <= k; ++i) out << ' ' << x(v, i) << '\n';
  }
  out << "End\n";
}

void write_lp(const IlpModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path.string());
  write_lp(model, out);
  out.flush();
  if (!out) throw Error(ErrorKind::io_error, "write failed: " + path.string());
}

IlpSolution read_solution(std::istream& in, const IlpModel& model) {
  const std::size_t n = model.vertex_count();
  const int k = model.k();
  constexpr double kTol = 1e-6;

  IlpSolution out;
  out.coloring.colors.assign(n, 0);
  bool have_z = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    double value = 0;
    if (!(fields >> value)) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(line_no) + ": expected 'name value'");
    }
    if (name == "z") {
      out.objective = value;
      have_z = true;
      continue;
    }
    std::size_t v = 0;
    int i = 0;
    char sep1 = 0, sep2 = 0;
    std::istringstream parts(name.size() > 2 && name[0] == 'x' ? name.substr(1) : "");
    if (!(parts >> sep1 >> v >> sep2 >> i) || sep1 != '_' || sep2 != '_' ||
        parts.peek() != std::char_traits<char>::eof()) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(line_no) + ": unknown variable '" + name + "'");
    }
    if (v < 1 || v > n || i < 1 || i > k) {
      throw Error(ErrorKind::invalid_input,
                  "line " + std::to_string(line_no) + ": " + name + " is not in the model");
    }
    const double rounded = std::round(value);
    if (std::fabs(value - rounded) > kTol || (rounded != 0 && rounded != 1)) {
      throw Error(ErrorKind::not_integral,
                  name + " = " + std::to_string(value) + " is not 0 or 1");
    }
    if (rounded == 1) {
      int& slot = out.coloring.colors[v - 1];
      if (slot != 0 && slot != i) {
        throw Error(ErrorKind::incomplete_solution,
                    "vertex " + std::to_string(v) + " has colors " +
                        std::to_string(slot) + " and " + std::to_string(i));
      }
      slot = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (out.coloring.colors[v] == 0) {
      throw Error(ErrorKind::incomplete_solution,
                  "vertex " + std::to_string(v + 1) + " has no color");
    }
  }
  if (!have_z) throw Error(ErrorKind::incomplete_solution, "no value for z");
  return out;
}

IlpSolution read_solution(const std::filesystem::path& path, const IlpModel& model) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + path.string());
  return read_solution(in, model);
}

}  // namespace pathpack
