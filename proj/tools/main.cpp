// splitsteiner command line: solve, generate, verify, bench.
#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <queue>

#include "splitsteiner/dispatch.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/generate.hpp"
#include "splitsteiner/instance_io.hpp"
#include "splitsteiner/oracle.hpp"
#include "splitsteiner/reductions.hpp"

namespace fs = std::filesystem;
using namespace splitsteiner;

namespace {

struct SolveArgs {
  std::string input;
  std::string method = "auto";
  int cap = 20;
  int degree_bound = 0;
  bool json = false;
  bool no_timing = false;
};

struct GenerateArgs {
  std::string kind;
  std::uint64_t seed = 1;
  int m = 5, n = 8;
  int leg = 2, leaves = 4, backbone = 2;
  int degree = 0, span = 0;
  int q = 2, sets = 5;
  bool planted = false;
  bool builtin_example = false;
  double density = 0.4;
  int vertices = 5;
  int budget = -1;
  std::string input;
  std::string output;
};

struct VerifyArgs {
  std::string instance;
  std::string solution;
  bool json = false;
};

struct BenchArgs {
  std::string corpus;
  std::vector<std::string> methods{"auto", "approx"};
  int cap = 20;
  bool json = false;
};

std::string labels(const SplitGraph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + g.label(v);
  return out.empty() ? "(empty)" : out;
}

int cmd_solve(const SolveArgs& a) {
  const ProblemInstance inst = read_instance_file(a.input);
  SolveOptions opt;
  opt.oracle_cap = a.cap;
  if (a.degree_bound > 0) opt.degree_bound = a.degree_bound;
  const SolveResult r = solve(inst, parse_method(a.method), opt);
  if (a.json) {
    std::cout << result_json(inst, r, !a.no_timing).dump(2) << '\n';
  } else {
    std::cout << "method   " << r.solution.method << '\n'
              << "size     " << r.solution.size() << '\n'
              << "steiner  " << labels(inst.graph, r.solution.steiner_set) << '\n';
    if (r.verified) std::cout << "verified " << (*r.verified ? "yes" : "NO") << '\n';
    if (inst.budget) std::cout << "budget   " << *inst.budget << " -> " << r.answer() << '\n';
    for (const auto& w : r.solution.warnings) std::cout << "warning  " << w << '\n';
    if (!a.no_timing) std::cout << "millis   " << r.millis << '\n';
  }
  return r.exit_code();
}

ProblemInstance generate(const GenerateArgs& a) {
  Rng rng(a.seed);
  const SpanLimit span{a.span};
  ProblemInstance out;
  if (a.kind == "random-path") {
    out = random_path_convex_I(rng, a.m, a.n, span);
  } else if (a.kind == "random-triad") {
    out = random_triad_convex_I(rng, a.m, a.leg, span);
  } else if (a.kind == "random-circular-i") {
    out = random_circular_convex_I(rng, a.m, a.n, span);
  } else if (a.kind == "random-circular-k") {
    out = random_circular_convex_K(rng, a.m, a.n, span);
  } else if (a.kind == "random-tree-k") {
    out = random_tree_convex_K(rng, a.m, a.n, span);
  } else if (a.kind == "random-star") {
    out = random_star_convex_I(rng, a.m, a.leaves,
                               a.degree > 0 ? std::optional<int>(a.degree) : std::nullopt);
  } else if (a.kind == "random-comb") {
    out = random_comb_convex_I(rng, a.m, a.backbone, span);
  } else if (a.kind == "random-split") {
    out = covering_instance(random_split_graph(rng, a.m, a.n, a.density));
  } else if (a.kind == "from-x3c") {
    const X3CInstance x = a.builtin_example ? x3c_example() : random_x3c(rng, a.q, a.sets, a.planted);
    out = reduce_x3c(x).instance;
  } else if (a.kind == "from-vc") {
    VCInstance vc;
    if (a.builtin_example) {
      vc.vertices = 3;
      vc.edges = {{0, 1}, {1, 2}, {0, 2}};
      vc.budget = 2;
    } else {
      vc = random_vc(rng, a.vertices, a.density);
    }
    out = reduce_vertex_cover(vc).instance;
  } else if (a.kind == "to-chordal") {
    SplitGraph source;
    if (a.builtin_example) {
      source = SplitGraph::from_neighborhoods(3, 4, {{3, 4}, {4, 5}, {5, 6}});
    } else if (!a.input.empty()) {
      source = read_instance_file(a.input).graph;
    } else {
      source = random_split_graph(rng, a.m, a.n, a.density);
    }
    out = reduce_split_to_chordal_convex(source).instance;
    if (a.builtin_example) out.budget = 2;
  } else {
    throw InvalidParameter("unknown generator kind '" + a.kind + "'");
  }
  if (a.budget >= 0) out.budget = a.budget;
  return out;
}

int cmd_generate(const GenerateArgs& a) {
  const ProblemInstance inst = generate(a);
  if (a.output.empty()) {
    std::cout << emit_instance(inst);
  } else {
    write_instance_file(a.output, inst);
  }
  return 0;
}

/// Terminals outside the component of G[S ∪ R] holding the first terminal.
VertexSet unreached(const SplitGraph& g, const VertexSet& terminals, const VertexSet& s) {
  const VertexSet members = set_union(terminals, s);
  if (members.empty()) return {};
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> q;
  q.push(terminals.empty() ? members.front() : terminals.front());
  seen[q.front()] = 1;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u] && contains(members, u)) {
        seen[u] = 1;
        q.push(u);
      }
    }
  }
  VertexSet out;
  for (Vertex t : terminals) {
    if (!seen[t]) out.push_back(t);
  }
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  const ProblemInstance inst = read_instance_file(a.instance);
  const SplitGraph& g = inst.graph;
  const SolutionClaim claim = read_solution_file(a.solution, g);
  nlohmann::ordered_json doc;
  std::vector<std::string> problems;

  if (inst.structure) {
    const auto report = verify_convexity(g, *inst.structure);
    doc["convex"] = report.valid;
    for (const auto& v : report.violations) problems.push_back(g.label(v.vertex) + ": " + v.reason);
  }
  if (claim.kind == SolutionClaim::Kind::Steiner) {
    const VertexSet overlap = set_intersection(claim.vertices, inst.terminals);
    if (!overlap.empty()) problems.push_back("Steiner set contains terminals " + labels(g, overlap));
    const VertexSet missing = unreached(g, inst.terminals, claim.vertices);
    if (!missing.empty()) problems.push_back("unreached terminals " + labels(g, missing));
    doc["steiner"] = overlap.empty() && missing.empty();
    std::vector<std::string> ml;
    for (Vertex v : missing) ml.push_back(g.label(v));
    doc["unreached"] = ml;
  } else {
    const bool ds = is_dominating(g, claim.vertices, DominationVariant::Dominating);
    doc["dominating"] = ds;
    doc["connected"] = is_dominating(g, claim.vertices, DominationVariant::Connected);
    doc["total"] = is_dominating(g, claim.vertices, DominationVariant::Total);
    if (!ds) problems.push_back("not a dominating set");
  }
  if (inst.budget) {
    const bool fits = static_cast<int>(claim.vertices.size()) <= *inst.budget;
    doc["within_budget"] = fits;
    if (!fits) problems.push_back("size " + std::to_string(claim.vertices.size()) + " exceeds budget " +
                                  std::to_string(*inst.budget));
  }
  doc["valid"] = problems.empty();
  doc["problems"] = problems;
  if (a.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << (problems.empty() ? "valid" : "invalid") << '\n';
    for (const auto& p : problems) std::cout << "  " << p << '\n';
  }
  return problems.empty() ? 0 : 1;
}

int cmd_bench(const BenchArgs& a) {
  std::vector<fs::path> files;
  if (fs::is_directory(a.corpus)) {
    for (const auto& e : fs::directory_iterator(a.corpus)) {
      if (e.is_regular_file() && e.path().extension() == ".split") files.push_back(e.path());
    }
  } else {
    throw InvalidParameter(a.corpus + " is not a directory");
  }
  std::sort(files.begin(), files.end());

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  double max_ratio = 0.0;
  for (const auto& file : files) {
    nlohmann::ordered_json base;
    base["instance"] = file.filename().string();
    ProblemInstance inst;
    std::optional<int> optimum;
    try {
      inst = read_instance_file(file.string());
      if (inst.graph.order() <= a.cap) optimum = oracle_min_steiner(inst.graph, inst.terminals, {a.cap}).size();
    } catch (const Error& e) {
      auto row = base;
      row["error"] = e.what();
      rows.push_back(row);
      continue;
    }
    for (const auto& m : a.methods) {
      auto row = base;
      row["method"] = m;
      try {
        const SolveResult r = solve(inst, parse_method(m), {a.cap, {}, true});
        row["size"] = r.solution.size();
        row["verified"] = r.verified.value_or(false);
        row["millis"] = r.millis;
        if (optimum) {
          row["optimum"] = *optimum;
          row["gap"] = r.solution.size() - *optimum;
          if (*optimum > 0) {
            const double ratio = static_cast<double>(r.solution.size()) / *optimum;
            row["ratio"] = ratio;
            max_ratio = std::max(max_ratio, ratio);
          }
        }
      } catch (const Error& e) {
        row["error"] = e.what();
      }
      rows.push_back(row);
    }
  }

  if (a.json) {
    nlohmann::ordered_json doc;
    doc["rows"] = rows;
    doc["max_ratio"] = max_ratio;
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  std::printf("%-28s %-13s %5s %7s %4s %7s %10s\n", "instance", "method", "size", "optimum", "gap", "ratio",
              "millis");
  for (const auto& row : rows) {
    if (row.contains("error")) {
      std::printf("%-28s %-13s error: %s\n", row["instance"].get<std::string>().c_str(),
                  row.value("method", std::string("-")).c_str(), row["error"].get<std::string>().c_str());
      continue;
    }
    std::printf("%-28s %-13s %5d %7s %4s %7s %10.3f\n", row["instance"].get<std::string>().c_str(),
                row["method"].get<std::string>().c_str(), row["size"].get<int>(),
                row.contains("optimum") ? std::to_string(row["optimum"].get<int>()).c_str() : "-",
                row.contains("gap") ? std::to_string(row["gap"].get<int>()).c_str() : "-",
                row.contains("ratio") ? std::to_string(row["ratio"].get<double>()).substr(0, 5).c_str() : "-",
                row["millis"].get<double>());
  }
  if (!rows.empty()) std::printf("max ratio %.4f\n", max_ratio);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum Steiner trees and dominating sets on convex split graphs"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("input", sa.input, "instance file")->required();
  solve_cmd->add_option("-m,--method", sa.method,
                        "auto, path, tree-k, triad, circular-i, circular-k, star-bounded, comb-xp, fpt, "
                        "kernel+fpt, approx, oracle");
  solve_cmd->add_option("--cap", sa.cap, "oracle vertex cap");
  solve_cmd->add_option("--degree-bound", sa.degree_bound, "degree bound for star-bounded");
  solve_cmd->add_flag("--json", sa.json, "print the result document");
  solve_cmd->add_flag("--no-timing", sa.no_timing, "omit timing (for diffable output)");

  GenerateArgs ga;
  auto* gen_cmd = app.add_subcommand("generate", "Write a generated instance");
  gen_cmd->add_option("kind", ga.kind,
                      "random-path, random-triad, random-circular-i, random-circular-k, random-tree-k, "
                      "random-star, random-comb, random-split, from-x3c, from-vc, to-chordal")
      ->required();
  gen_cmd->add_option("--seed", ga.seed);
  gen_cmd->add_option("--m", ga.m, "clique size");
  gen_cmd->add_option("--n", ga.n, "independent size");
  gen_cmd->add_option("--leg", ga.leg, "triad leg length");
  gen_cmd->add_option("--leaves", ga.leaves, "star leaves");
  gen_cmd->add_option("--backbone", ga.backbone, "comb backbone length");
  gen_cmd->add_option("--degree", ga.degree, "star degree bound");
  gen_cmd->add_option("--span", ga.span, "largest generated neighborhood");
  gen_cmd->add_option("--q", ga.q, "X3C: ground set is 3q");
  gen_cmd->add_option("--sets", ga.sets, "X3C: number of triples");
  gen_cmd->add_flag("--planted", ga.planted, "X3C: plant an exact cover");
  gen_cmd->add_flag("--example", ga.builtin_example, "the built-in example instead of a random source");
  gen_cmd->add_option("--density", ga.density, "edge probability");
  gen_cmd->add_option("--vertices", ga.vertices, "vertex cover source size");
  gen_cmd->add_option("--budget", ga.budget, "override the budget");
  gen_cmd->add_option("--input", ga.input, "to-chordal: source instance file");
  gen_cmd->add_option("-o,--output", ga.output, "output file (default stdout)");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("instance", va.instance)->required();
  verify_cmd->add_option("solution", va.solution)->required();
  verify_cmd->add_flag("--json", va.json);

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Run methods over a directory of .split files");
  bench_cmd->add_option("corpus", ba.corpus)->required();
  bench_cmd->add_option("--methods", ba.methods)->delimiter(',');
  bench_cmd->add_option("--cap", ba.cap, "oracle vertex cap");
  bench_cmd->add_flag("--json", ba.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve_cmd) return cmd_solve(sa);
    if (*gen_cmd) return cmd_generate(ga);
    if (*verify_cmd) return cmd_verify(va);
    if (*bench_cmd) return cmd_bench(ba);
  } catch (const StructureMismatch& e) {
    std::cerr << "structure mismatch: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
