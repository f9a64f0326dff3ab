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

#include "pathpack/packing.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pathpack/error.hpp"

namespace pathpack {

int PackingColoring::k_used() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

std::vector<Violation> validate(const Graph& g, const DistanceMatrix& dm,
                                const PackingColoring& coloring) {
  const std::size_t n = g.vertex_count();
  if (coloring.colors.size() != n || dm.size() != n) {
    throw Error(ErrorKind::invalid_input,
                "coloring covers " + std::to_string(coloring.colors.size()) +
                    " vertices, graph has " + std::to_string(n));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (coloring.colors[v] < 1) {
      throw Error(ErrorKind::invalid_input,
                  "vertex " + std::to_string(v + 1) + " has color " +
                      std::to_string(coloring.colors[v]));
    }
  }
  std::vector<Violation> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int c = coloring.colors[u];
      if (c == coloring.colors[v] && dm(u, v) <= static_cast<std::uint32_t>(c)) {
        out.push_back({u, v, c, dm(u, v)});
      }
    }
  }
  return out;
}

bool is_valid(const Graph& g, const DistanceMatrix& dm,
              const PackingColoring& coloring) {
  return validate(g, dm, coloring).empty();
}

// Bounds ---------------------------------------------------------------------

namespace {

constexpr std::uint64_t kBoundBudget = 2'000'000;

/// Branch and bound maximum independent set on at most 64 vertices.
class SmallMis {
 public:
  explicit SmallMis(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  /// Returns nullopt-like -1 when the budget is exhausted.
  int solve() {
    const std::uint64_t all =
        adj_.size() == 64 ? ~0ULL : ((1ULL << adj_.size()) - 1);
    best_ = 0;
    nodes_ = 0;
    search(all, 0);
    return nodes_ > kBoundBudget ? -1 : best_;
  }

 private:
  void search(std::uint64_t live, int size) {
    if (++nodes_ > kBoundBudget) return;
    if (live == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + std::popcount(live) <= best_) return;
    int min_v = -1, min_deg = 65, max_v = -1, max_deg = -1;
    for (std::uint64_t rest = live; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int d = std::popcount(adj_[v] & live);
      if (d < min_deg) min_deg = d, min_v = v;
      if (d > max_deg) max_deg = d, max_v = v;
    }
    if (min_deg <= 1) {
      search(live & ~(adj_[min_v] | (1ULL << min_v)), size + 1);
      return;
    }
    search(live & ~(adj_[max_v] | (1ULL << max_v)), size + 1);
    search(live & ~(1ULL << max_v), size);
  }

  std::vector<std::uint64_t> adj_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::size_t packing_number_upper(const DistanceMatrix& dm,
                                 std::uint32_t spacing) {
  const std::size_t n = dm.size();
  if (n == 0) return 0;
  if (n > 64) return n;
  std::vector<std::uint64_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && dm(u, v) <= spacing) adj[u] |= 1ULL << v;
    }
  }
  int alpha = SmallMis(std::move(adj)).solve();
  return alpha < 0 ? n : static_cast<std::size_t>(alpha);
}

std::size_t min_vertex_cover(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 30) {
    throw Error(ErrorKind::invalid_parameter,
                "vertex cover search limited to 30 vertices");
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1ULL << e.v;
    adj[e.v] |= 1ULL << e.u;
  }
  // beta = n - alpha; the 30-vertex cap keeps the search far below budget.
  return n - static_cast<std::size_t>(SmallMis(std::move(adj)).solve());
}

std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  std::size_t best = 1;
  std::uint64_t nodes = 0;
  // Bron-Kerbosch with pivoting over sorted vertex lists.
  std::function<void(std::size_t, std::vector<Vertex>, std::vector<Vertex>)>
      expand = [&](std::size_t size, std::vector<Vertex> cand,
                   std::vector<Vertex> excluded) {
        if (++nodes > kBoundBudget) return;
        if (cand.empty()) {
          best = std::max(best, size);
          return;
        }
        if (size + cand.size() <= best) return;
        Vertex pivot = cand.front();
        std::size_t pivot_hits = 0;
        for (const auto* pool : {&cand, &excluded}) {
          for (Vertex u : *pool) {
            std::size_t hits = 0;
            for (Vertex w : cand) hits += g.has_edge(u, w);
            if (hits >= pivot_hits) pivot_hits = hits, pivot = u;
          }
        }
        std::vector<Vertex> branch;
        for (Vertex v : cand) {
          if (!g.has_edge(pivot, v)) branch.push_back(v);
        }
        for (Vertex v : branch) {
          std::vector<Vertex> next_cand, next_excl;
          for (Vertex w : cand) if (g.has_edge(v, w)) next_cand.push_back(w);
          for (Vertex w : excluded) if (g.has_edge(v, w)) next_excl.push_back(w);
          expand(size + 1, std::move(next_cand), std::move(next_excl));
          cand.erase(std::find(cand.begin(), cand.end(), v));
          excluded.push_back(v);
        }
      };
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  expand(0, std::move(all), {});
  return best;
}

int lower_bound(const Graph& g, const DistanceMatrix& dm) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  int bound = 1;
  if (g.edge_count() > 0) bound = 2;
  bound = std::max(bound, static_cast<int>(clique_number(g)));

  const std::uint32_t diam = dm.diameter();
  if (diam == 2 && n <= 30) {
    bound = std::max(bound, static_cast<int>(min_vertex_cover(g)) + 1);
  }

  // Counting: with k colors at most sum_{i < diam, i <= k} alpha_i +
  // max(0, k - (diam - 1)) vertices get colored.
  if (diam >= 1) {
    std::size_t capacity = 0;
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      if (static_cast<std::uint32_t>(k) <= diam - 1) {
        capacity += packing_number_upper(dm, static_cast<std::uint32_t>(k));
      } else {
        capacity += 1;
      }
      if (capacity >= n) {
        bound = std::max(bound, k);
        break;
      }
    }
  }
  return bound;
}

// Solvers --------------------------------------------------------------------

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::limit_hit: return "limit-hit";
    case SolveStatus::exceeded: return "exceeded";
  }
  return "unknown";
}

namespace {

std::vector<Vertex> bfs_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (Vertex w : g.neighbors(order[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

void check_fixed(const std::vector<int>& fixed, std::size_t n) {
  if (!fixed.empty() && fixed.size() != n) {
    throw Error(ErrorKind::invalid_input, "fixed colors must cover every vertex");
  }
}

/// One k-round of the exact search.
class KRound {
 public:
  KRound(const Graph& g, const DistanceMatrix& dm, int k,
         std::uint64_t node_limit, const std::vector<int>& fixed)
      : g_(g),
        dm_(dm),
        n_(g.vertex_count()),
        k_(k),
        node_limit_(node_limit),
        fixed_(fixed),
        order_(bfs_order(g)),
        color_(n_, 0),
        blocked_(n_ * (k + 1), 0),
        avail_(n_, k),
        used_(k + 1, 0),
        singleton_from_(std::max<int>(
            2, static_cast<int>(std::min<std::uint32_t>(dm.diameter(), k + 1)))),
        avail_small_(n_, std::min(k, singleton_from_ - 1)),
        unused_singletons_(std::max(0, k - singleton_from_ + 1)),
        open_(std::min(k, singleton_from_ - 1) + 1, n_),
        room_(open_.size(), 0) {
    if (avail_small_.empty() || avail_small_[0] == 0) stuck_ = n_;
    for (std::size_t c = 1; c < room_.size(); ++c) {
      room_[c] = n_ <= 64 ? packing_number_upper(dm, static_cast<std::uint32_t>(c)) : n_;
    }
    uncolored_ = n_;
    build_balls();
  }

  FeasibilityResult run() {
    FeasibilityResult result;
    // Degree >= k rules out color 1.
    for (Vertex v = 0; v < n_; ++v) {
      if (g_.degree(v) >= static_cast<std::size_t>(k_) && fixed_at(v) != 1) {
        block(v, 1);
      }
    }
    bool ok = true;
    for (Vertex v = 0; v < n_ && ok; ++v) {
      int c = fixed_at(v);
      if (c == 0) continue;
      if (c > k_ || blocked_[idx(v, c)] || !assign(v, c)) ok = false;
    }
    for (Vertex v = 0; v < n_ && ok; ++v) {
      if (color_[v] == 0 && avail_[v] == 0) ok = false;
    }
    if (short_of_singletons()) ok = false;
    if (ok && dfs(0)) {
      result.status = Feasibility::feasible;
      result.coloring.colors = color_;
    } else {
      result.status = aborted_ ? Feasibility::limit_hit : Feasibility::infeasible;
    }
    result.nodes_expanded = nodes_;
    return result;
  }

 private:
  std::size_t idx(Vertex v, int c) const {
    return static_cast<std::size_t>(v) * (k_ + 1) + c;
  }
  int fixed_at(Vertex v) const { return fixed_.empty() ? 0 : fixed_[v]; }

  void build_balls() {
    const std::size_t stride = n_ > 0 ? n_ - 1 : 0;
    sorted_.resize(n_ * stride);
    reach_.assign(n_ * (k_ + 1), 0);
    for (Vertex v = 0; v < n_; ++v) {
      auto* row = sorted_.data() + v * stride;
      std::size_t j = 0;
      for (Vertex u = 0; u < n_; ++u) if (u != v) row[j++] = u;
      std::stable_sort(row, row + stride, [&](Vertex a, Vertex b) {
        return dm_(v, a) < dm_(v, b);
      });
      std::size_t count = 0;
      for (int c = 0; c <= k_; ++c) {
        while (count < stride &&
               dm_(v, row[count]) <= static_cast<std::uint32_t>(c)) {
          ++count;
        }
        reach_[idx(v, c)] = static_cast<std::uint32_t>(count);
      }
    }
  }

  void block(Vertex v, int c) {
    if (blocked_[idx(v, c)]++ == 0 && color_[v] == 0) {
      --avail_[v];
      lose_small(v, c);
    }
  }

  // Uncolored vertices with no color below singleton_from_ left each need
  // their own unused singleton color.
  void lose_small(Vertex v, int c) {
    if (c >= singleton_from_) return;
    --open_[c];
    if (--avail_small_[v] == 0) ++stuck_;
  }
  void regain_small(Vertex v, int c) {
    if (c >= singleton_from_) return;
    ++open_[c];
    if (avail_small_[v]++ == 0) --stuck_;
  }
  bool short_of_singletons() const {
    if (stuck_ > static_cast<std::size_t>(unused_singletons_)) return true;
    // Each small color still fits at most min(packing room, open vertices).
    std::size_t fits = static_cast<std::size_t>(unused_singletons_);
    for (std::size_t c = 1; c < open_.size() && fits < uncolored_; ++c) {
      const std::size_t left = room_[c] > static_cast<std::size_t>(used_[c])
                                   ? room_[c] - used_[c] : 0;
      fits += std::min(left, open_[c]);
    }
    return fits < uncolored_;
  }
  // A newly colored or uncolored vertex enters or leaves the open counts.
  void toggle_open(Vertex v, int sign) {
    for (std::size_t c = 1; c < open_.size(); ++c) {
      if (!blocked_[idx(v, static_cast<int>(c))]) open_[c] += sign;
    }
  }

  /// Colors v and blocks c within distance c. Returns false when some
  /// uncolored vertex loses its last color; the assignment stays in place
  /// and must be undone by the caller.
  bool assign(Vertex v, int c) {
    toggle_open(v, -1);
    --uncolored_;
    color_[v] = c;
    if (avail_small_[v] == 0) --stuck_;
    if (c >= singleton_from_ && used_[c] == 0) --unused_singletons_;
    ++used_[c];
    bool alive = true;
    const Vertex* ball = sorted_.data() + static_cast<std::size_t>(v) * (n_ - 1);
    const std::uint32_t size = reach_[idx(v, c)];
    for (std::uint32_t j = 0; j < size; ++j) {
      Vertex u = ball[j];
      if (blocked_[idx(u, c)]++ == 0 && color_[u] == 0) {
        if (--avail_[u] == 0) alive = false;
        lose_small(u, c);
      }
    }
    return alive && !short_of_singletons();
  }

  void unassign(Vertex v, int c) {
    const Vertex* ball = sorted_.data() + static_cast<std::size_t>(v) * (n_ - 1);
    const std::uint32_t size = reach_[idx(v, c)];
    for (std::uint32_t j = 0; j < size; ++j) {
      Vertex u = ball[j];
      if (--blocked_[idx(u, c)] == 0 && color_[u] == 0) {
        ++avail_[u];
        regain_small(u, c);
      }
    }
    --used_[c];
    if (c >= singleton_from_ && used_[c] == 0) ++unused_singletons_;
    if (avail_small_[v] == 0) ++stuck_;
    color_[v] = 0;
    ++uncolored_;
    toggle_open(v, +1);
  }

  bool dfs(std::size_t pos) {
    while (pos < n_ && color_[order_[pos]] != 0) ++pos;
    if (pos == n_) return true;
    const Vertex v = order_[pos];
    const std::uint32_t diam = dm_.diameter();
    // Unused colors from singleton_from_ up are interchangeable: each fits at
    // most once and nothing else tells them apart. Only the smallest is tried.
    const int singleton_from = singleton_from_;
    bool fresh_singleton_tried = false;
    for (int c = 1; c <= k_; ++c) {
      if (blocked_[idx(v, c)]) continue;
      // Colors above diam - 1 fit at most once.
      if (static_cast<std::uint32_t>(c) >= diam && used_[c] > 0) continue;
      if (c >= singleton_from && used_[c] == 0) {
        if (fresh_singleton_tried) continue;
        fresh_singleton_tried = true;
      }
      if (++nodes_ > node_limit_) {
        aborted_ = true;
        return false;
      }
      const bool alive = assign(v, c);
      if (alive && dfs(pos + 1)) return true;
      unassign(v, c);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const DistanceMatrix& dm_;
  std::size_t n_;
  int k_;
  std::uint64_t node_limit_;
  const std::vector<int>& fixed_;
  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::vector<std::uint32_t> blocked_;
  std::vector<int> avail_;
  std::vector<int> used_;
  std::vector<Vertex> sorted_;
  std::vector<std::uint32_t> reach_;
  int singleton_from_;
  std::vector<int> avail_small_;
  int unused_singletons_;
  std::size_t stuck_ = 0;
  std::vector<std::size_t> open_;  // uncolored vertices where c is unblocked
  std::vector<std::size_t> room_;  // packing number bound per small color
  std::size_t uncolored_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

FeasibilityResult find_packing_coloring(const Graph& g, const DistanceMatrix& dm,
                                        int k, std::uint64_t node_limit,
                                        const std::vector<int>& fixed) {
  check_fixed(fixed, g.vertex_count());
  if (k < 1) {
    FeasibilityResult r;
    r.status = g.vertex_count() == 0 ? Feasibility::feasible
                                     : Feasibility::infeasible;
    return r;
  }
  return KRound(g, dm, k, node_limit, fixed).run();
}

PackingColoring greedy_packing_coloring(const Graph& g, const DistanceMatrix& dm,
                                        const std::vector<int>& fixed) {
  check_fixed(fixed, g.vertex_count());
  const std::size_t n = g.vertex_count();
  PackingColoring out;
  out.colors.assign(n, 0);
  if (!fixed.empty()) out.colors = fixed;
  for (Vertex v : bfs_order(g)) {
    if (out.colors[v] != 0) continue;
    for (int c = 1;; ++c) {
      bool fits = true;
      for (Vertex u = 0; u < n && fits; ++u) {
        if (u != v && out.colors[u] == c &&
            dm(u, v) <= static_cast<std::uint32_t>(c)) {
          fits = false;
        }
      }
      if (fits) {
        out.colors[v] = c;
        break;
      }
    }
  }
  return out;
}

SolveResult exact_chi_p(const Graph& g, const DistanceMatrix& dm,
                        const SolveOptions& options) {
  const std::size_t n = g.vertex_count();
  check_fixed(options.fixed, n);
  SolveResult result;
  const int k_max = options.k_max > 0 ? options.k_max : static_cast<int>(n);
  int k = std::max(1, lower_bound(g, dm));
  result.proven_lower = k;
  std::uint64_t remaining = options.node_limit;
  for (; k <= k_max; ++k) {
    auto round = find_packing_coloring(g, dm, k, remaining, options.fixed);
    result.nodes_expanded += round.nodes_expanded;
    remaining = round.nodes_expanded >= remaining ? 0 : remaining - round.nodes_expanded;
    if (round.status == Feasibility::feasible) {
      result.status = SolveStatus::optimal;
      result.chi_p = k;
      result.witness = std::move(round.coloring);
      result.proven_optimal = true;
      result.proven_lower = k;
      return result;
    }
    if (round.status == Feasibility::limit_hit) {
      result.status = SolveStatus::limit_hit;
      result.witness = greedy_packing_coloring(g, dm, options.fixed);
      result.chi_p = result.witness.k_used();
      result.proven_lower = k;
      return result;
    }
    result.proven_lower = k + 1;
  }
  result.status = SolveStatus::exceeded;
  return result;
}

SolveResult brute_force_chi_p(const Graph& g, const DistanceMatrix& dm,
                              int k_max) {
  const std::size_t n = g.vertex_count();
  if (n > 16) {
    throw Error(ErrorKind::invalid_parameter,
                "brute-force oracle is limited to 16 vertices");
  }
  SolveResult result;
  std::vector<int> colors(n, 0);
  std::function<bool(std::size_t, int)> extend = [&](std::size_t v, int k) {
    if (v == n) return true;
    for (int c = 1; c <= k; ++c) {
      ++result.nodes_expanded;
      bool fits = true;
      for (std::size_t u = 0; u < v && fits; ++u) {
        fits = !(colors[u] == c &&
                 dm(static_cast<Vertex>(u), static_cast<Vertex>(v)) <=
                     static_cast<std::uint32_t>(c));
      }
      if (!fits) continue;
      colors[v] = c;
      if (extend(v + 1, k)) return true;
    }
    colors[v] = 0;
    return false;
  };
  for (int k = n == 0 ? 0 : 1; k <= k_max; ++k) {
    if (extend(0, k)) {
      result.status = SolveStatus::optimal;
      result.chi_p = k;
      result.witness.colors = colors;
      result.proven_optimal = true;
      result.proven_lower = k;
      return result;
    }
    result.proven_lower = k + 1;
  }
  result.status = SolveStatus::exceeded;
  return result;
}

// Coloring files -------------------------------------------------------------

PackingColoring parse_coloring(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int declared_k = -1;
  std::vector<std::pair<std::size_t, int>> entries;
  std::size_t max_vertex = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::parse_error,
                "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "k") {
      if (!(iss >> declared_k) || declared_k < 0) fail("malformed 'k' header");
    } else if (tag == "v") {
      long long v = 0, c = 0;
      if (!(iss >> v >> c) || v < 1 || c < 1) fail("expected 'v <vertex> <color>'");
      entries.emplace_back(static_cast<std::size_t>(v - 1), static_cast<int>(c));
      max_vertex = std::max(max_vertex, static_cast<std::size_t>(v));
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  PackingColoring out;
  out.colors.assign(max_vertex, 0);
  for (auto [v, c] : entries) {
    if (out.colors[v] != 0) {
      throw Error(ErrorKind::parse_error,
                  "vertex " + std::to_string(v + 1) + " colored twice");
    }
    out.colors[v] = c;
  }
  for (std::size_t v = 0; v < out.colors.size(); ++v) {
    if (out.colors[v] == 0) {
      throw Error(ErrorKind::parse_error,
                  "vertex " + std::to_string(v + 1) + " has no color");
    }
  }
  if (declared_k >= 0 && declared_k != out.k_used()) {
    throw Error(ErrorKind::parse_error,
                "header declares k " + std::to_string(declared_k) +
                    " but colors reach " + std::to_string(out.k_used()));
  }
  return out;
}

void format_coloring(const PackingColoring& coloring, std::ostream& out) {
  out << "k " << coloring.k_used() << '\n';
  for (std::size_t v = 0; v < coloring.colors.size(); ++v) {
    out << "v " << v + 1 << ' ' << coloring.colors[v] << '\n';
  }
}

PackingColoring read_coloring(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open " + path.string());
  return parse_coloring(in);
}

void write_coloring(const PackingColoring& coloring,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path.string());
  format_coloring(coloring, out);
}

}  // namespace pathpack
