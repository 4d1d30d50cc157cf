// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "splitsteiner/dispatch.hpp"
#include "splitsteiner/domination.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/generate.hpp"
#include "splitsteiner/oracle.hpp"
#include "splitsteiner/parameterized.hpp"
#include "splitsteiner/reductions.hpp"
#include "splitsteiner/solver_derived.hpp"
#include "splitsteiner/solver_path.hpp"
#include "splitsteiner/solver_tree_k.hpp"
#include "splitsteiner/solvers_special.hpp"

using namespace splitsteiner;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int oracle_value(const SplitGraph& g, const VertexSet& r) { return oracle_min_steiner(g, r).size(); }

/// Range and mean of observed optimum sizes, so a run of trivial instances shows.
struct Spread {
  int lo = 1 << 30, hi = 0;
  long sum = 0, count = 0;
  void add(int v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
    ++count;
  }
  std::string str() const {
    if (count == 0) return "no optima";
    char buf[64];
    std::snprintf(buf, sizeof buf, "optima %d..%d mean %.2f", lo, hi, static_cast<double>(sum) / count);
    return buf;
  }
};

/// Shared across criteria 3 and 5.
struct AnchorTally {
  long triad_checked = 0, triad_bad = 0;
  long circ_i_checked = 0, circ_i_bad = 0;
  long circ_k_checked = 0, circ_k_bad = 0;
};
AnchorTally anchors;

/// Is there a minimum cover whose intersection with `nbhd` has size in [lo, hi]?
bool some_optimum_within(const std::vector<VertexSet>& optima, const VertexSet& nbhd, int lo, int hi) {
  return std::any_of(optima.begin(), optima.end(), [&](const VertexSet& s) {
    const int c = static_cast<int>(set_intersection(s, nbhd).size());
    return c >= lo && c <= hi;
  });
}

// 1 -------------------------------------------------------------------------
Outcome worked_examples() {
  Outcome o;
  std::ostringstream d;
  {
    const auto t = Clock::now();
    const X3CInstance x = x3c_example();
    const X3CReduction red = reduce_x3c(x);
    const int opt = oracle_value(red.instance.graph, red.instance.terminals);
    const SolveResult r = solve(red.instance, Method::Auto);
    const auto sets = x3c_sets_from_solution(red, r.solution.steiner_set);
    const bool ok = opt == 2 && r.solution.size() == 2 && is_exact_cover(x, sets) && seconds_since(t) < 1.0;
    d << "x3c min " << opt << " cover {";
    for (std::size_t i = 0; i < sets.size(); ++i) d << (i ? "," : "") << "C" << sets[i] + 1;
    d << "}";
    o.pass &= ok;
  }
  {
    const auto t = Clock::now();
    VCInstance vc{3, {{0, 1}, {1, 2}, {0, 2}}, 2};
    const VCReduction red = reduce_vertex_cover(vc);
    const int opt = oracle_value(red.instance.graph, red.instance.terminals);
    const SolveResult r = solve(red.instance, Method::Auto);
    const bool ok = opt <= 2 && r.within_budget.value_or(false) && r.verified.value_or(false) &&
                    is_vertex_cover(vc, vertex_cover_from_solution(red, r.solution.steiner_set)) &&
                    seconds_since(t) < 1.0;
    d << "; vc min " << opt << (ok ? " yes@2" : " FAILED");
    o.pass &= ok;
  }
  {
    const auto t = Clock::now();
    const SplitGraph src = SplitGraph::from_neighborhoods(3, 4, {{3, 4}, {4, 5}, {5, 6}});
    ChordalReduction red = reduce_split_to_chordal_convex(src);
    red.instance.budget = 2;
    const bool convex = verify_convexity(red.instance.graph, *red.instance.structure).valid;
    const int opt = oracle_value(red.instance.graph, red.instance.terminals);
    const SolveResult r = solve(red.instance, Method::Auto);
    const VertexSet back = chordal_solution_to_source(red, src, r.solution.steiner_set);
    const bool ok = convex && opt == 2 && r.within_budget.value_or(false) && covers_independent(src, back) &&
                    seconds_since(t) < 1.0;
    d << "; chordal min " << opt << (ok ? " yes@2" : " FAILED");
    o.pass &= ok;
  }
  o.detail = d.str();
  return o;
}

// 2 -------------------------------------------------------------------------
Outcome greedy_path() {
  Rng rng(2002);
  const auto t = Clock::now();
  int mismatches = 0;
  Spread spread;
  const int runs = 2000;
  for (int i = 0; i < runs; ++i) {
    const auto inst = random_path_convex_I(rng, uniform(rng, 1, 10), uniform(rng, 2, 10));
    const int opt = oracle_value(inst.graph, inst.terminals);
    spread.add(opt);
    if (solve_path_convex_I(inst).size() != opt) ++mismatches;
  }
  const double secs = seconds_since(t);
  return {mismatches == 0 && secs < 60.0,
          std::to_string(runs) + " instances, " + std::to_string(mismatches) + " mismatches, " + spread.str() +
              ", " + std::to_string(secs).substr(0, 5) + " s"};
}

// 3 -------------------------------------------------------------------------
Outcome derived_solvers() {
  Rng rng(3003);
  const auto t = Clock::now();
  const int runs = 1000;
  int bad_triad = 0, bad_ci = 0, bad_ck = 0;
  Spread spread;
  for (int i = 0; i < runs; ++i) {
    const int leg = uniform(rng, 2, 3);
    const auto inst = random_triad_convex_I(rng, uniform(rng, 1, 15 - 3 * leg), leg);
    const SteinerSolution s = solve_triad_convex_I(inst);
    const auto optima = oracle_all_min_covers(inst.graph);
    spread.add(static_cast<int>(optima.front().size()));
    if (s.size() != static_cast<int>(optima.front().size())) ++bad_triad;
    const VertexSet nz = inst.graph.clique_neighbors(*inst.structure->root());
    ++anchors.triad_checked;
    if (s.stats.anchors < 1 || s.stats.anchors > 3 || !some_optimum_within(optima, nz, 1, 3)) ++anchors.triad_bad;
  }
  for (int i = 0; i < runs; ++i) {
    const auto inst = random_circular_convex_I(rng, uniform(rng, 1, 8), uniform(rng, 3, 8));
    const SteinerSolution s = solve_circular_convex_I(inst);
    const auto optima = oracle_all_min_covers(inst.graph);
    spread.add(static_cast<int>(optima.front().size()));
    if (s.size() != static_cast<int>(optima.front().size())) ++bad_ci;
    ++anchors.circ_i_checked;
    bool ok = s.stats.anchors >= 1 && s.stats.anchors <= 2;
    for (Vertex x : inst.graph.independent()) ok &= some_optimum_within(optima, inst.graph.clique_neighbors(x), 1, 2);
    if (!ok) ++anchors.circ_i_bad;
  }
  for (int i = 0; i < runs; ++i) {
    const auto inst = random_circular_convex_K(rng, uniform(rng, 3, 8), uniform(rng, 2, 8));
    const SteinerSolution s = solve_circular_convex_K(inst);
    const auto optima = oracle_all_min_covers(inst.graph);
    spread.add(static_cast<int>(optima.front().size()));
    if (s.size() != static_cast<int>(optima.front().size())) ++bad_ck;
    ++anchors.circ_k_checked;
    bool ok = s.stats.anchors >= 1 && s.stats.anchors <= 2;
    for (Vertex x : inst.graph.independent()) ok &= some_optimum_within(optima, inst.graph.clique_neighbors(x), 1, 2);
    if (!ok) ++anchors.circ_k_bad;
  }
  const double secs = seconds_since(t);
  std::ostringstream d;
  d << runs << " each; mismatches triad " << bad_triad << ", circular-I " << bad_ci << ", circular-K " << bad_ck
    << ", " << spread.str() << ", " << std::to_string(secs).substr(0, 5) << " s";
  return {bad_triad + bad_ci + bad_ck == 0 && secs < 300.0, d.str()};
}

// 4 -------------------------------------------------------------------------
Outcome tree_k() {
  Rng rng(4004);
  int mismatches = 0;
  Spread spread;
  const int runs = 2000;
  for (int i = 0; i < runs; ++i) {
    const auto inst = random_tree_convex_K(rng, uniform(rng, 1, 8), uniform(rng, 2, 10));
    const int opt = oracle_value(inst.graph, inst.terminals);
    spread.add(opt);
    if (solve_tree_convex_K(inst).size() != opt) ++mismatches;
  }
  return {mismatches == 0,
          std::to_string(runs) + " instances, " + std::to_string(mismatches) + " mismatches, " + spread.str()};
}

// 5 -------------------------------------------------------------------------
Outcome anchor_lemmas() {
  std::ostringstream d;
  d << "triad " << anchors.triad_bad << "/" << anchors.triad_checked << ", circular-I " << anchors.circ_i_bad << "/"
    << anchors.circ_i_checked << ", circular-K " << anchors.circ_k_bad << "/" << anchors.circ_k_checked
    << " violations";
  const bool ran = anchors.triad_checked > 0 && anchors.circ_i_checked > 0 && anchors.circ_k_checked > 0;
  return {ran && anchors.triad_bad + anchors.circ_i_bad + anchors.circ_k_bad == 0, d.str()};
}

// 6 -------------------------------------------------------------------------
Outcome domination_equivalence() {
  Rng rng(6006);
  int mismatches = 0;
  Spread spread;
  const int runs = 1000;
  for (int i = 0; i < runs; ++i) {
    const SplitGraph g = random_split_graph(rng, uniform(rng, 1, 8), uniform(rng, 2, 8),
                                            std::uniform_real_distribution<double>(0.1, 0.7)(rng));
    const int gamma = static_cast<int>(oracle_min_dominating(g, DominationVariant::Dominating).size());
    spread.add(gamma);
    if (gamma != oracle_value(g, g.independent())) ++mismatches;
  }
  return {mismatches == 0,
          std::to_string(runs) + " graphs, " + std::to_string(mismatches) + " mismatches, " + spread.str()};
}

// 7 -------------------------------------------------------------------------
Outcome fpt_branch() {
  Rng rng(7007);
  int verdict_errors = 0, node_violations = 0;
  long checks = 0;
  const int runs = 500;
  for (int i = 0; i < runs; ++i) {
    const int m = uniform(rng, 1, 10);
    const SplitGraph g = random_split_graph(rng, m, uniform(rng, 2, 8),
                                            std::uniform_real_distribution<double>(0.1, 0.6)(rng));
    const int opt = oracle_value(g, g.independent());
    for (int k = 0; k <= m; ++k) {
      BranchStats st;
      bool found = false;
      try {
        found = fpt_branch_solve(g, k, &st).has_value();
      } catch (const Error&) {
        ++node_violations;  // the internal leaf bound fired
        continue;
      }
      ++checks;
      if (found != (opt <= k)) ++verdict_errors;
      if (st.leaves > (1L << m) || st.branch_nodes > (1L << m)) ++node_violations;
    }
  }
  std::ostringstream d;
  d << runs << " graphs, " << checks << " (graph, k) verdicts, " << verdict_errors << " wrong, " << node_violations
    << " node-bound violations";
  return {verdict_errors == 0 && node_violations == 0, d.str()};
}

// 8 -------------------------------------------------------------------------
Outcome kernels() {
  Rng rng(8008);
  std::ostringstream d;
  bool pass = true;
  {
    int bound_bad = 0, answer_bad = 0, max_candidates = 0;
    const int runs = 500;
    for (int i = 0; i < runs; ++i) {
      const int l = uniform(rng, 1, 4);
      const auto inst = random_star_convex_I(rng, uniform(rng, 1, 10), l);
      const int k = uniform(rng, 0, inst.graph.clique_size());
      const bool original_yes = oracle_value(inst.graph, inst.terminals) <= k;
      bool kernel_yes = false;
      try {
        const StarKernel ker = kernelize_star_pendant(inst, k);
        max_candidates = std::max(max_candidates, ker.candidates);
        if (ker.candidates > (1 << l) - 1) ++bound_bad;
        const VertexSet sol = oracle_min_cover(ker.kernel.graph);
        kernel_yes = static_cast<int>(sol.size()) <= ker.budget;
        if (kernel_yes && !covers_independent(inst.graph, lift_star_kernel(ker, sol))) ++answer_bad;
      } catch (const BudgetExhausted&) {
        kernel_yes = false;
      }
      if (kernel_yes != original_yes) ++answer_bad;
    }
    d << "star: " << runs << " runs, max candidates " << max_candidates << ", " << bound_bad << " over 2^l-1, "
      << answer_bad << " answer flips";
    pass &= bound_bad == 0 && answer_bad == 0;
  }
  {
    int bound_bad = 0, answer_bad = 0, fallbacks = 0;
    long max_order = 0;
    const int runs = 500;
    for (int i = 0; i < runs; ++i) {
      const int dmax = uniform(rng, 1, 3);
      const int m = uniform(rng, 2, 8);
      const SplitGraph g = random_bounded_degree_split(rng, m, uniform(rng, 2, 14 - m), dmax);
      const int k = uniform(rng, 0, 4);
      const bool original_yes = oracle_value(g, g.independent()) <= k;
      const NormalizedDegrees nd = normalize_degrees(g);
      bool kernel_yes = false;
      try {
        const HittingSetKernel ker = kernelize_hitting_set(nd, k);
        fallbacks += ker.fallback;
        max_order = std::max(max_order, ker.reduced_order);
        if (ker.reduced_order > hitting_set_kernel_bound(nd.degree, k)) ++bound_bad;
        const VertexSet sol = oracle_min_cover(ker.kernel.graph);
        kernel_yes = static_cast<int>(sol.size()) <= *ker.kernel.budget;
        if (kernel_yes) {
          const VertexSet lifted = lift_solution(ker.certificate, g, sol);
          if (static_cast<int>(lifted.size()) > k) ++answer_bad;
        }
      } catch (const NoInstance&) {
        kernel_yes = false;
      }
      if (kernel_yes != original_yes) ++answer_bad;
    }
    d << "; hitting set: " << runs << " runs, max order " << max_order << ", " << bound_bad << " over bound, "
      << fallbacks << " fallbacks, " << answer_bad << " answer flips";
    pass &= bound_bad == 0 && answer_bad == 0;
  }
  return {pass, d.str()};
}

// 9 -------------------------------------------------------------------------
Outcome approximation() {
  Rng rng(9009);
  const int runs = 1000;
  int violations = 0;
  double worst = 0.0;
  Spread spread;
  std::map<std::string, int> histogram;
  for (int i = 0; i < runs; ++i) {
    const int m = uniform(rng, 1, 8);
    const SplitGraph g = random_split_graph(rng, m, uniform(rng, 2, 16 - m),
                                            std::uniform_real_distribution<double>(0.1, 0.7)(rng));
    const int gamma = static_cast<int>(oracle_min_dominating(g, DominationVariant::Dominating).size());
    spread.add(gamma);
    const VertexSet a = approx_dominating_set(g);
    if (!is_dominating(g, a, DominationVariant::Dominating)) ++violations;
    const double ratio = static_cast<double>(a.size()) / gamma;
    const double limit = 2.0 - 1.0 / g.independent_size();
    if (ratio > limit + 1e-12) ++violations;
    worst = std::max(worst, ratio);
    char bucket[16];
    std::snprintf(bucket, sizeof bucket, "%.2f", ratio);
    ++histogram[bucket];
  }
  std::ostringstream d;
  d << runs << " graphs, " << violations << " violations, max ratio " << worst << ", " << spread.str() << ", ratios {";
  bool first = true;
  for (const auto& [b, c] : histogram) {
    d << (first ? "" : ", ") << b << ":" << c;
    first = false;
  }
  d << "}";
  return {violations == 0, d.str()};
}

// 10 ------------------------------------------------------------------------
Outcome reductions() {
  Rng rng(10010);
  const int runs = 500;
  int x_bad = 0, v_bad = 0, c_bad = 0, x_yes = 0, v_yes = 0;
  for (int i = 0; i < runs; ++i) {
    const int q = uniform(rng, 1, 3);
    const X3CInstance x = random_x3c(rng, q, uniform(rng, q, 7), i % 2 == 0);
    const X3CReduction red = reduce_x3c(x);
    const bool source = x3c_has_exact_cover(x);
    const VertexSet s = oracle_min_steiner(red.instance.graph, red.instance.terminals).steiner_set;
    const bool target = static_cast<int>(s.size()) <= q;
    x_yes += source;
    if (source != target) ++x_bad;
    if (target && !is_exact_cover(x, x3c_sets_from_solution(red, s))) ++x_bad;
    if (!verify_convexity(red.instance.graph, *red.instance.structure).valid) ++x_bad;
  }
  for (int i = 0; i < runs; ++i) {
    VCInstance vc;
    do {
      vc = random_vc(rng, uniform(rng, 3, 6), std::uniform_real_distribution<double>(0.2, 0.7)(rng));
    } while (vc.vertices + 2 * static_cast<int>(vc.edges.size()) > 20);
    vc.budget = uniform(rng, 0, vc.vertices);
    const VCReduction red = reduce_vertex_cover(vc);
    const bool source = min_vertex_cover(vc) <= vc.budget;
    const VertexSet s = oracle_min_steiner(red.instance.graph, red.instance.terminals).steiner_set;
    const bool target = static_cast<int>(s.size()) <= vc.budget;
    v_yes += source;
    if (source != target) ++v_bad;
    if (target && !is_vertex_cover(vc, vertex_cover_from_solution(red, s))) ++v_bad;
    if (!verify_convexity(red.instance.graph, *red.instance.structure).valid) ++v_bad;
  }
  for (int i = 0; i < runs; ++i) {
    const int m = uniform(rng, 1, 6);
    const SplitGraph src = random_split_graph(rng, m, uniform(rng, 1, std::min(6, 10 - m)),
                                              std::uniform_real_distribution<double>(0.2, 0.7)(rng));
    const ChordalReduction red = reduce_split_to_chordal_convex(src);
    const int k = uniform(rng, 0, m);
    const VertexSet ss = oracle_min_cover(src);
    const VertexSet ts = oracle_min_cover(red.instance.graph);
    if ((static_cast<int>(ss.size()) <= k) != (static_cast<int>(ts.size()) <= k)) ++c_bad;
    if (ss.size() != ts.size()) ++c_bad;
    if (!covers_independent(src, chordal_solution_to_source(red, src, ts))) ++c_bad;
    if (!verify_convexity(red.instance.graph, *red.instance.structure).valid) ++c_bad;
  }
  std::ostringstream d;
  d << runs << " each; x3c " << x_bad << " bad (" << x_yes << " yes), vc " << v_bad << " bad (" << v_yes
    << " yes), split->chordal " << c_bad << " bad";
  return {x_bad + v_bad + c_bad == 0, d.str()};
}

// 11 ------------------------------------------------------------------------
Outcome normalization() {
  Rng rng(11011);
  const int runs = 1000;
  int mismatches = 0, unverified = 0;
  for (int i = 0; i < runs; ++i) {
    ProblemInstance inst;
    const int m = uniform(rng, 1, 6);
    if (i % 2 == 0) {
      inst = random_path_convex_I(rng, m, uniform(rng, 2, 12 - m));
    } else {
      inst = covering_instance(random_split_graph(rng, m, uniform(rng, 1, 12 - m),
                                                  std::uniform_real_distribution<double>(0.2, 0.7)(rng)));
    }
    inst.terminals = random_terminals(rng, inst.graph);
    const SolveResult r = solve(inst, Method::Auto);
    if (r.solution.size() != oracle_value(inst.graph, inst.terminals)) ++mismatches;
    if (!r.verified.value_or(false)) ++unverified;
  }
  return {mismatches == 0 && unverified == 0, std::to_string(runs) + " instances, " + std::to_string(mismatches) +
                                                  " size mismatches, " + std::to_string(unverified) + " unverified"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked examples", worked_examples},
      {"greedy optimality on path-convex", greedy_path},
      {"triad / circular-I / circular-K vs oracle", derived_solvers},
      {"tree-convex on K vs oracle", tree_k},
      {"anchor cardinality", anchor_lemmas},
      {"domination equivalence", domination_equivalence},
      {"fpt branching verdicts and node bound", fpt_branch},
      {"kernel bounds and answer preservation", kernels},
      {"approximation ratio", approximation},
      {"reduction equivalences", reductions},
      {"terminal normalization", normalization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds_since(t));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
