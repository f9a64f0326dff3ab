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

#include "pathpack/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pathpack/caterpillar.hpp"
#include "pathpack/error.hpp"
#include "pathpack/graph_io.hpp"
#include "pathpack/ilp.hpp"
#include "pathpack/instance.hpp"
#include "pathpack/patterns.hpp"
#include "pathpack/tables.hpp"

namespace pathpack {

namespace {

// Line-oriented "key: value" output, fields in insertion order.
class Report {
 public:
  explicit Report(std::string command) { add("command", std::move(command)); }

  void add(const std::string& key, const std::string& value) {
    lines_.emplace_back(key, value);
  }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, std::string_view value) { add(key, std::string(value)); }
  void add(const std::string& key, bool value) { add(key, value ? "yes" : "no"); }
  template <class T>
  void add(const std::string& key, T value) {
    add(key, std::to_string(value));
  }

  void print(std::ostream& out, std::string_view status) const {
    for (const auto& [k, v] : lines_) out << k << ": " << v << '\n';
    out << "status: " << status << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

class Stopwatch {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

struct Loaded {
  Graph graph;
  std::string description;
};

// A graph file when the single argument names one, an instance spec otherwise.
Loaded load_graph(const std::vector<std::string>& words) {
  if (words.size() == 1 && std::filesystem::is_regular_file(words[0])) {
    return {read_graph(words[0]), words[0]};
  }
  const InstanceSpec spec = parse_instance(join(words));
  return {build_instance(spec), to_string(spec)};
}

std::string colors_line(const std::vector<int>& colors) {
  std::string out;
  for (int c : colors) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
  }
  return out;
}

void write_coloring_to(const PackingColoring& coloring, const std::string& path,
                       std::ostream& out) {
  if (path.empty() || path == "-") {
    format_coloring(coloring, out);
  } else {
    write_coloring(coloring, path);
  }
}

// Probe shorthand: "k6" "c8" "cycle" "complete", then n=a..b, l=a..b,
// t=a..b or t<=b.
ProbeRequest parse_probe(const std::vector<std::string>& words) {
  ProbeRequest req;
  bool n_set = false;
  auto range = [](const std::string& word, std::size_t& lo, std::size_t& hi) {
    const std::string body = word.substr(word.find_first_of("=<") + (word.find("<=") != std::string::npos ? 2 : 1));
    const bool upto = word.find("<=") != std::string::npos;
    try {
      if (upto) {
        lo = 1;
        hi = std::stoul(body);
      } else if (auto dots = body.find(".."); dots != std::string::npos) {
        lo = std::stoul(body.substr(0, dots));
        hi = std::stoul(body.substr(dots + 2));
      } else {
        lo = hi = std::stoul(body);
      }
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "bad range '" + word + "'");
    }
  };
  for (const auto& w : words) {
    if (w == "cycle" || w == "complete") {
      req.base = w == "cycle" ? BaseKind::cycle : BaseKind::complete;
    } else if ((w[0] == 'k' || w[0] == 'c') && w.size() > 1 &&
               std::all_of(w.begin() + 1, w.end(), ::isdigit)) {
      req.base = w[0] == 'k' ? BaseKind::complete : BaseKind::cycle;
      req.n_min = req.n_max = std::stoul(w.substr(1));
      n_set = true;
    } else if (w.rfind("n=", 0) == 0 || w.rfind("n<=", 0) == 0) {
      range(w, req.n_min, req.n_max);
      if (w.find("<=") != std::string::npos) req.n_min = 3;
      n_set = true;
    } else if (w.rfind("l=", 0) == 0 || w.rfind("l<=", 0) == 0) {
      range(w, req.overlap_min, req.overlap_max);
      if (w.find("<=") != std::string::npos) req.overlap_min = 2;
    } else if (w.rfind("t=", 0) == 0 || w.rfind("t<=", 0) == 0) {
      range(w, req.t_min, req.t_max);
    } else {
      throw Error(ErrorKind::parse_error, "unknown probe argument '" + w + "'");
    }
  }
  if (!n_set) throw Error(ErrorKind::parse_error, "probe needs a family such as k6, c8 or n=A..B");
  bool l_given = std::any_of(words.begin(), words.end(),
                             [](const std::string& w) { return w[0] == 'l'; });
  if (!l_given) {
    req.overlap_min = 2;
    req.overlap_max = req.n_max;
  }
  req.reference_bound = req.base == BaseKind::cycle ? 5 : (req.n_min == 6 && req.n_max == 6 ? 22 : 0);
  return req;
}

struct Flags {
  std::string output;
  int k_max = 0;
  std::uint64_t node_limit = 50'000'000;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Packing colorings of path-aligned products, coronas and caterpillars"};
  app.name("pathpack");
  app.require_subcommand(1);
  Flags flags;
  std::vector<std::string> words;
  std::string solution_path;
  std::size_t l_max = 7, m_max = 2, max_vertices = 60;
  std::uint64_t budget = 0;
  std::uint64_t tables_node_limit = 20'000'000;
  std::uint64_t probe_node_limit = 2'000'000;
  int ilp_k = 0;

  auto common = [&](CLI::App* sub, bool with_output) {
    if (with_output) sub->add_option("-o,--output", flags.output, "Output file");
    sub->add_option("--seed", flags.seed, "Reserved; every algorithm is deterministic");
  };

  auto* build = app.add_subcommand("build", "Build a graph and write it in graph-file format");
  build->add_option("spec", words, "Instance, e.g. product cycle n=4 l=2 t=5")->required();
  common(build, true);

  auto* solve = app.add_subcommand("solve", "Exact packing chromatic number");
  solve->add_option("graph", words, "Graph file or instance spec")->required();
  solve->add_option("--k-max", flags.k_max, "Largest k tried (default: vertex count)");
  solve->add_option("--node-limit", flags.node_limit, "Search node limit");
  common(solve, true);

  auto* color = app.add_subcommand("color", "Pattern coloring of a path-aligned product");
  color->add_option("spec", words, "product cycle|complete n=N l=L t=T")->required();
  common(color, true);

  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("files", words, "GRAPH COLORING")->required()->expected(2);
  common(verify, false);

  auto* recognize = app.add_subcommand("recognize", "Classify a caterpillar");
  recognize->add_option("spec", words, "caterpillar L:m1,...,mL or a tree graph file")->required();
  recognize->add_option("--node-limit", flags.node_limit, "Search node limit for the exact value");
  common(recognize, true);

  auto* ilp = app.add_subcommand("ilp", "Write the 0/1 program, or read back a solution");
  ilp->add_option("graph", words, "Graph file or instance spec")->required();
  ilp->add_option("-k,--k", ilp_k, "Color budget (default: best known upper bound)");
  ilp->add_option("--solution", solution_path, "Solution file to read and check");
  ilp->add_option("--node-limit", flags.node_limit, "Search node limit for the default k");
  common(ilp, true);

  auto* tables = app.add_subcommand("tables", "Re-derive the table cells");
  tables->add_option("--node-limit", tables_node_limit, "Node limit per exact cell")->capture_default_str();
  tables->add_option("--max-vertices", max_vertices, "Largest exact instance")->capture_default_str();
  tables->add_option("--jobs", flags.jobs, "Worker threads");
  common(tables, false);

  auto* probe = app.add_subcommand("probe", "Upper bounds on a range of products");
  probe->add_option("range", words, "e.g. k6 t<=4, or c8 l=2..4 t=1..3")->required();
  probe->add_option("--node-limit", probe_node_limit, "Node limit per instance")->capture_default_str();
  probe->add_option("--budget", budget, "Total node budget (0 = none)");
  probe->add_option("--jobs", flags.jobs, "Worker threads");
  common(probe, false);

  auto* crosscheck = app.add_subcommand("crosscheck", "Caterpillar recognition against the exact solver");
  crosscheck->add_option("--l-max", l_max, "Longest backbone")->capture_default_str();
  crosscheck->add_option("--m-max", m_max, "Most leaves per backbone vertex")->capture_default_str();
  crosscheck->add_option("--node-limit", flags.node_limit, "Node limit per caterpillar");
  crosscheck->add_option("--jobs", flags.jobs, "Worker threads");
  common(crosscheck, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) {
      const InstanceSpec spec = parse_instance(join(words));
      const Graph g = build_instance(spec);
      if (flags.output.empty() || flags.output == "-") {
        format_graph(g, out);
        return 0;
      }
      write_graph(g, flags.output);
      Report r("build");
      r.add("instance", to_string(spec));
      r.add("vertices", g.vertex_count());
      r.add("edges", g.edge_count());
      r.add("output", flags.output);
      r.print(out, "ok");
      return 0;
    }

    if (*solve) {
      const Stopwatch clock;
      const Loaded in = load_graph(words);
      const DistanceMatrix dm = all_pairs_distances(in.graph);
      SolveOptions options;
      options.k_max = flags.k_max;
      options.node_limit = flags.node_limit;
      const SolveResult res = exact_chi_p(in.graph, dm, options);
      Report r("solve");
      r.add("instance", in.description);
      r.add("vertices", in.graph.vertex_count());
      r.add("edges", in.graph.edge_count());
      r.add("diameter", dm.diameter());
      r.add("lower_bound", lower_bound(in.graph, dm));
      r.add("result", to_string(res.status));
      if (res.status == SolveStatus::optimal) {
        r.add("chi_p", res.chi_p);
      } else if (res.status == SolveStatus::limit_hit) {
        r.add("upper_bound", res.chi_p);
      }
      r.add("proven_lower", res.proven_lower);
      r.add("nodes", res.nodes_expanded);
      if (res.status != SolveStatus::exceeded) {
        r.add("coloring", colors_line(res.witness.colors));
        if (!flags.output.empty()) {
          write_coloring(res.witness, flags.output);
          r.add("output", flags.output);
        }
      }
      r.add("wall_time_ms", clock.ms());
      r.print(out, to_string(res.status));
      return 0;
    }

    if (*color) {
      const InstanceSpec parsed = parse_instance(join(words));
      const auto* spec = std::get_if<ProductSpec>(&parsed);
      if (!spec) {
        throw Error(ErrorKind::unsupported, "color takes a product spec");
      }
      const TheoremColoring tc = color_by_theorem(*spec);
      const Graph g = path_aligned_product(*spec);
      const DistanceMatrix dm = all_pairs_distances(g);
      const bool valid = is_valid(g, dm, tc.coloring);
      Report r("color");
      r.add("instance", to_string(*spec));
      r.add("entry", tc.entry_key);
      r.add("statement", tc.anchor);
      r.add("route", to_string(tc.route));
      r.add("claimed", std::string(tc.claimed_exact ? "= " : "<= ") +
                           std::to_string(tc.claimed_bound));
      r.add("colors_used", tc.coloring.k_used());
      r.add("valid", valid);
      r.add("remainder_rederived", tc.remainder_rederived);
      for (std::size_t c = 0; c < tc.trace.size(); ++c) {
        r.add("block", "copy " + std::to_string(c + 1) + " (" + tc.trace[c] + ")");
      }
      if (!flags.output.empty()) {
        write_coloring_to(tc.coloring, flags.output, out);
        r.add("output", flags.output);
      } else {
        r.add("coloring", colors_line(tc.coloring.colors));
      }
      const bool ok = valid && tc.coloring.k_used() <= tc.claimed_bound;
      r.print(out, ok ? "ok" : "invalid");
      return ok ? 0 : 1;
    }

    if (*verify) {
      const Graph g = read_graph(words[0]);
      const PackingColoring c = read_coloring(words[1]);
      const DistanceMatrix dm = all_pairs_distances(g);
      const auto violations = validate(g, dm, c);
      Report r("verify");
      r.add("graph", words[0]);
      r.add("coloring", words[1]);
      r.add("vertices", g.vertex_count());
      r.add("colors_used", c.k_used());
      r.add("violations", violations.size());
      for (std::size_t i = 0; i < violations.size() && i < 10; ++i) {
        const auto& v = violations[i];
        r.add("violation", std::to_string(v.u + 1) + " " + std::to_string(v.v + 1) +
                               " color " + std::to_string(v.color) + " distance " +
                               std::to_string(v.dist));
      }
      r.add("valid", violations.empty());
      r.print(out, violations.empty() ? "ok" : "invalid");
      return violations.empty() ? 0 : 1;
    }

    if (*recognize) {
      CaterpillarSpec spec;
      std::string source;
      if (words.size() == 1 && std::filesystem::is_regular_file(words[0])) {
        source = words[0];
        const auto found = tree_to_caterpillar_spec(read_graph(words[0]));
        if (const auto* no = std::get_if<NotCaterpillar>(&found)) {
          Report r("recognize");
          r.add("instance", source);
          r.add("caterpillar", false);
          r.add("witness_vertex", no->vertex + 1);
          r.add("residual_degree", no->residual_degree);
          r.print(out, "not-caterpillar");
          return 0;
        }
        spec = std::get<CaterpillarSpec>(found);
      } else {
        const InstanceSpec parsed = parse_instance(join(words));
        const auto* cat = std::get_if<CaterpillarSpec>(&parsed);
        if (!cat) throw Error(ErrorKind::parse_error, "recognize takes a caterpillar spec or a tree file");
        spec = *cat;
        source = to_string(spec);
      }
      const ChiClass cls = classify_chi_p(spec, flags.node_limit);
      Report r("recognize");
      r.add("instance", source);
      r.add("caterpillar", to_string(spec));
      r.add("chi_p_class", cls.more() ? std::string("more") : std::to_string(cls.value));
      for (const auto& m : cls.matches) {
        r.add("family", to_string(m.family) + " k=" + std::to_string(m.k) +
                            (m.reversed ? " reversed" : " forward"));
      }
      bool ok = true;
      const Graph g = caterpillar(spec);
      const DistanceMatrix dm = all_pairs_distances(g);
      if (cls.certificate) {
        const bool valid = is_valid(g, dm, *cls.certificate);
        ok = valid && cls.certificate->k_used() == cls.value;
        r.add("certificate_valid", valid);
        if (!flags.output.empty()) {
          write_coloring_to(*cls.certificate, flags.output, out);
          r.add("output", flags.output);
        }
      } else {
        r.add("upper_bound", "<= " + std::to_string(cls.upper_note));
        if (cls.exact) r.add("chi_p", *cls.exact);
        if (cls.witness) {
          const bool valid = is_valid(g, dm, *cls.witness);
          ok = valid;
          r.add("witness_colors", cls.witness->k_used());
          r.add("witness_valid", valid);
        }
      }
      r.print(out, ok ? "ok" : "invalid");
      return ok ? 0 : 1;
    }

    if (*ilp) {
      const Loaded in = load_graph(words);
      const DistanceMatrix dm = all_pairs_distances(in.graph);
      int k = ilp_k;
      std::string k_source = "given";
      if (k <= 0) {
        const UpperBound ub = upper_bound_via_solver(in.graph, dm, flags.node_limit);
        k = ub.bound;
        k_source = ub.method;
      }
      const IlpModel model = build_model(dm, k);
      Report r("ilp");
      r.add("instance", in.description);
      r.add("vertices", model.vertex_count());
      r.add("k", k);
      r.add("k_source", k_source);
      r.add("variables", model.variable_count());
      r.add("assignment_constraints", model.assignment_count());
      r.add("separation_constraints", model.separation_count());
      r.add("bound_constraints", model.bound_count());
      bool ok = true;
      if (!solution_path.empty()) {
        const IlpSolution sol = read_solution(std::filesystem::path(solution_path), model);
        const bool valid = is_valid(in.graph, dm, sol.coloring);
        ok = valid;
        r.add("solution", solution_path);
        r.add("objective", std::to_string(sol.objective));
        r.add("colors_used", sol.coloring.k_used());
        r.add("valid", valid);
      } else if (flags.output.empty() || flags.output == "-") {
        write_lp(model, out);
        return 0;
      } else {
        write_lp(model, std::filesystem::path(flags.output));
        r.add("output", flags.output);
      }
      r.print(out, ok ? "ok" : "invalid");
      return ok ? 0 : 1;
    }

    if (*tables) {
      const Stopwatch clock;
      TablesOptions options;
      options.node_limit = tables_node_limit;
      options.max_vertices = max_vertices;
      options.jobs = flags.jobs;
      const TablesReport rep = reproduce_tables(options);
      Report r("tables");
      for (const auto& c : rep.equality) {
        std::string line = c.entry_key + " " + to_string(c.spec) + " = " +
                           std::to_string(c.claimed) + " " + std::string(to_string(c.outcome));
        if (c.outcome != CellOutcome::skipped) line += " computed " + std::to_string(c.computed);
        if (!c.note.empty()) line += " (" + c.note + ")";
        r.add("cell", line);
      }
      for (const auto& c : rep.bound_failures) {
        r.add("bound_failure", c.entry_key + " " + to_string(c.spec) + " <= " +
                                   std::to_string(c.claimed) + " used " +
                                   std::to_string(c.computed) + " (" + c.note + ")");
      }
      r.add("equality_cells", rep.equality.size());
      r.add("equality_passed", rep.equality_passed());
      r.add("equality_failed", rep.equality_failed());
      r.add("equality_skipped", rep.equality_skipped());
      r.add("bound_cells", rep.bound_checked);
      r.add("bound_failed", rep.bound_failures.size());
      r.add("wall_time_ms", clock.ms());
      const bool ok = rep.ok();
      r.print(out, ok ? "ok" : "fail");
      return ok ? 0 : 1;
    }

    if (*probe) {
      const Stopwatch clock;
      ProbeRequest req = parse_probe(words);
      req.node_limit = probe_node_limit;
      req.node_budget = budget;
      req.jobs = flags.jobs;
      const ProbeReport rep = conjecture_probe(req);
      Report r("probe");
      r.add("family", std::string(to_string(req.base)) + " n=" + std::to_string(req.n_min) +
                          ".." + std::to_string(req.n_max));
      r.add("reference_bound", req.reference_bound ? std::to_string(req.reference_bound)
                                                   : std::string("none"));
      for (const auto& row : rep.rows) {
        std::string line = to_string(row.spec) + " best " + std::to_string(row.best_upper) +
                           " method " + row.method + " proven " +
                           (row.proven_optimal ? "yes" : "no") + " lower " +
                           std::to_string(row.proven_lower) + " nodes " +
                           std::to_string(row.nodes);
        r.add("row", line);
      }
      r.add("rows", rep.rows.size());
      r.add("partial", rep.partial);
      r.add("wall_time_ms", clock.ms());
      r.print(out, rep.partial ? "partial" : "ok");
      return 0;
    }

    if (*crosscheck) {
      const Stopwatch clock;
      const CrosscheckReport rep =
          enumerate_and_crosscheck(l_max, m_max, flags.jobs, flags.node_limit);
      Report r("crosscheck");
      r.add("l_max", l_max);
      r.add("m_max", m_max);
      r.add("checked", rep.checked);
      r.add("recognized", rep.recognized);
      r.add("certificates", rep.certificates_checked);
      for (const auto& d : rep.disagreements) {
        r.add("disagreement", to_string(d.spec) + " " + d.detail);
      }
      r.add("disagreements", rep.disagreements.size());
      r.add("partial", rep.partial);
      r.add("wall_time_ms", clock.ms());
      const bool ok = rep.disagreements.empty();
      r.print(out, ok ? (rep.partial ? "partial" : "ok") : "disagreement");
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pathpack
