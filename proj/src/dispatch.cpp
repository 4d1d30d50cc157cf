#include "splitsteiner/dispatch.hpp"

#include <array>
#include <chrono>

#include "splitsteiner/domination.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/oracle.hpp"
#include "splitsteiner/parameterized.hpp"
#include "splitsteiner/solver_derived.hpp"
#include "splitsteiner/solver_path.hpp"
#include "splitsteiner/solver_tree_k.hpp"
#include "splitsteiner/solvers_special.hpp"

namespace splitsteiner {

namespace {

constexpr std::array<std::string_view, 12> kMethodNames = {
    "auto",         "path",    "tree-k", "triad",      "circular-i", "circular-k",
    "star-bounded", "comb-xp", "fpt",    "kernel+fpt", "approx",     "oracle"};

// comb-xp enumerates O(n^{2l}) anchor sets; past this backbone auto prefers fpt
constexpr int kAutoCombBackbone = 3;

SteinerSolution kernel_then_fpt(const SplitGraph& g) {
  const NormalizedDegrees nd = normalize_degrees(g);
  SteinerSolution out;
  out.method = "kernel+fpt";
  for (int k = 0; k <= g.clique_size(); ++k) {
    HittingSetKernel ker;
    try {
      ker = kernelize_hitting_set(nd, k);
    } catch (const NoInstance&) {
      continue;
    }
    BranchStats st;
    const auto found = fpt_branch_solve(ker.kernel.graph, *ker.kernel.budget, &st);
    out.stats.search_nodes += st.branch_nodes;
    out.stats.search_leaves += st.leaves;
    if (!found) continue;
    out.steiner_set = lift_solution(ker.certificate, g, *found);
    out.stats.notes.push_back("kernel order " + std::to_string(ker.kernel.graph.order()) + " at k = " +
                              std::to_string(k) + (ker.fallback ? " (branching fallback)" : ""));
    return out;
  }
  throw Infeasible("no covering set exists");
}

SteinerSolution run_structured(const ProblemInstance& inst, Method method, const SolveOptions& options) {
  switch (method) {
    case Method::Path:
      return solve_path_convex_I(inst);
    case Method::TreeK:
      return solve_tree_convex_K(inst);
    case Method::Triad:
      return solve_triad_convex_I(inst);
    case Method::CircularI:
      return solve_circular_convex_I(inst);
    case Method::CircularK:
      return solve_circular_convex_K(inst);
    case Method::StarBounded:
      return solve_star_convex_I_bounded(inst, options.degree_bound);
    case Method::CombXp:
      return solve_comb_convex_I_xp(inst);
    case Method::Fpt:
      return fpt_min(inst.graph);
    case Method::KernelFpt:
      return kernel_then_fpt(inst.graph);
    default:
      throw InvalidParameter("method " + std::string(to_string(method)) + " is not a covering solver");
  }
}

}  // namespace

std::string_view to_string(Method method) { return kMethodNames[static_cast<int>(method)]; }

Method parse_method(std::string_view name) {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
    if (kMethodNames[i] == name) return static_cast<Method>(i);
  }
  throw InvalidParameter("unknown method '" + std::string(name) + "'");
}

std::string SolveResult::answer() const {
  if (!within_budget) return "";
  if (*within_budget) return "yes";
  return exact ? "no" : "unknown";
}

int SolveResult::exit_code() const { return !within_budget || *within_budget ? 0 : 1; }

std::pair<Method, std::string> auto_method(const ProblemInstance& instance) {
  const auto& s = instance.structure;
  if (!s) return {Method::Fpt, "no structure declared; using fpt"};
  if (!verify_convexity(instance.graph, *s).valid) {
    return {Method::Fpt, "declared structure is not convex for this graph; using fpt"};
  }
  const bool on_i = s->side() == Side::Independent;
  switch (s->kind()) {
    case StructureKind::Path:
      return {on_i ? Method::Path : Method::TreeK, ""};
    case StructureKind::Cycle:
      return {on_i ? Method::CircularI : Method::CircularK, ""};
    case StructureKind::Triad:
      return {on_i ? Method::Triad : Method::TreeK, ""};
    case StructureKind::Star:
      return {on_i ? Method::StarBounded : Method::TreeK, ""};
    case StructureKind::Comb:
      if (!on_i) return {Method::TreeK, ""};
      if (static_cast<int>(s->get_if<CombLayout>()->backbone.size()) <= kAutoCombBackbone) {
        return {Method::CombXp, ""};
      }
      return {Method::Fpt, "comb backbone too long for comb-xp; using fpt"};
    case StructureKind::Tree:
      if (!on_i) return {Method::TreeK, ""};
      return {Method::Fpt, "no polynomial solver for tree-convex on I; using fpt"};
    case StructureKind::Chordal:
      return {Method::Fpt, "no polynomial solver for chordal-convex; using fpt"};
  }
  return {Method::Fpt, "unrecognized structure; using fpt"};
}

SolveResult solve(const ProblemInstance& instance, Method method, const SolveOptions& options) {
  validate_instance(instance);
  if (instance.terminals.empty()) throw EmptyTerminals("terminal set is empty");
  const auto start = std::chrono::steady_clock::now();
  SolveResult out;
  out.requested = method;

  if (method == Method::Oracle) {
    out.solution = oracle_min_steiner(instance.graph, instance.terminals, {options.oracle_cap});
  } else if (method == Method::Approx) {
    ApproxSteiner a = approx_steiner(instance.graph, instance.terminals);
    out.solution = std::move(a.solution);
    out.exact = false;
  } else {
    const NormalizedInstance norm = normalize_terminals(instance);
    if (norm.trivial) {
      out.solution.method = method == Method::Auto ? "trivial" : std::string(to_string(method));
      out.solution.stats.notes.push_back("terminals connect without Steiner vertices");
    } else {
      Method run = method;
      if (method == Method::Auto) {
        auto [picked, why] = auto_method(norm.instance);
        run = picked;
        if (!why.empty()) out.solution.warnings.push_back(why);
      } else if (norm.structure_dropped && method != Method::Fpt && method != Method::KernelFpt) {
        throw StructureMismatch("the declared structure does not survive terminal normalization");
      }
      auto warnings = std::move(out.solution.warnings);
      out.solution = run_structured(norm.instance, run, options);
      out.solution.warnings.insert(out.solution.warnings.begin(), warnings.begin(), warnings.end());
      out.solution.steiner_set = lift_normalized(norm, out.solution.steiner_set);
      if (norm.structure_dropped) {
        out.solution.warnings.push_back("structure dropped by terminal normalization");
      }
    }
  }

  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (options.verify) {
    out.verified = verify_steiner(instance.graph, instance.terminals, out.solution.steiner_set);
  }
  out.witness = connectivity_witness(instance.graph, instance.terminals, out.solution.steiner_set);
  if (instance.budget) out.within_budget = out.solution.size() <= *instance.budget;
  return out;
}

nlohmann::ordered_json result_json(const ProblemInstance& instance, const SolveResult& result,
                                   bool with_timing) {
  const auto& g = instance.graph;
  nlohmann::ordered_json doc;
  doc["method"] = result.solution.method;
  doc["requested"] = std::string(to_string(result.requested));
  doc["exact"] = result.exact;
  std::vector<int> ids;
  std::vector<std::string> labels;
  for (Vertex v : result.solution.steiner_set) {
    ids.push_back(v + 1);
    labels.push_back(g.label(v));
  }
  doc["steiner_set"] = ids;
  doc["labels"] = labels;
  doc["size"] = result.solution.size();
  if (result.verified) doc["verified"] = *result.verified;
  if (instance.budget) {
    doc["budget"] = *instance.budget;
    doc["answer"] = result.answer();
  }
  nlohmann::ordered_json tree = nlohmann::ordered_json::array();
  for (auto [a, b] : result.witness) tree.push_back({a + 1, b + 1});
  doc["witness"] = tree;
  const auto& st = result.solution.stats;
  nlohmann::ordered_json stats;
  stats["path_solver_calls"] = st.path_solver_calls;
  stats["cases"] = st.cases;
  stats["skipped_cases"] = st.skipped_cases;
  stats["anchors"] = st.anchors;
  stats["search_nodes"] = st.search_nodes;
  stats["search_leaves"] = st.search_leaves;
  stats["notes"] = st.notes;
  doc["stats"] = stats;
  doc["warnings"] = result.solution.warnings;
  if (with_timing) doc["millis"] = result.millis;
  return doc;
}

}  // namespace splitsteiner
