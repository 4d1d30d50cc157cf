#include "splitsteiner/solvers_special.hpp"

#include <algorithm>
#include <map>

#include "splitsteiner/errors.hpp"
#include "splitsteiner/solver_path.hpp"

namespace splitsteiner {

namespace {

void require_kind_on_I(const ProblemInstance& instance, StructureKind kind) {
  const auto& s = instance.structure;
  if (!s || s->kind() != kind || s->side() != Side::Independent) {
    throw StructureMismatch("solver needs a " + std::string(to_string(kind)) + " structure on I");
  }
  const auto report = verify_convexity(instance.graph, *s);
  if (!report.valid) {
    throw StructureMismatch("declared layout is not convex: " + report.violations.front().reason);
  }
  require_terminals_are_independent_set(instance);
}

void require_neighbors(const SplitGraph& g) {
  for (Vertex x : g.independent()) {
    if (g.clique_neighbors(x).empty()) throw Infeasible(g.label(x) + " has no clique neighbor");
  }
}

/// Visits the size-k subsets of pool in lexicographic order until visit
/// returns true.
template <class Visit>
bool for_each_subset(const std::vector<Vertex>& pool, int k, Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  std::vector<Vertex> pick(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    if (visit(pick)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VertexSet clique_twin_representatives(const SplitGraph& graph) {
  std::map<VertexSet, Vertex> first;
  for (Vertex u : graph.clique()) first.emplace(graph.independent_neighbors(u), u);
  std::vector<Vertex> out;
  for (const auto& [nbhd, u] : first) out.push_back(u);
  return make_vertex_set(std::move(out));
}

SteinerSolution solve_star_convex_I_bounded(const ProblemInstance& instance,
                                            std::optional<int> degree_bound) {
  require_kind_on_I(instance, StructureKind::Star);
  const SplitGraph& g = instance.graph;
  require_neighbors(g);
  const int d = degree_bound.value_or(g.max_independent_degree());
  for (Vertex x : g.independent()) {
    if (static_cast<int>(g.clique_neighbors(x).size()) > d) {
      throw DegreeBoundViolated(g.label(x) + " has degree above " + std::to_string(d));
    }
  }
  const auto& star = *instance.structure->get_if<StarLayout>();
  const Vertex z = star.root;
  const VertexSet reps = clique_twin_representatives(g);
  const VertexSet nz = set_intersection(g.clique_neighbors(z), reps);

  SteinerSolution out;
  out.method = "star-bounded";
  std::vector<Vertex> s1;
  VertexSet r2;
  for (Vertex y : star.leaves) {
    if (set_intersection(g.clique_neighbors(y), nz).empty()) {
      s1.push_back(g.clique_neighbors(y).front());
    } else {
      r2.push_back(y);
    }
  }
  r2 = make_vertex_set(std::move(r2));

  VertexSet s2;
  for (int k = 1; k <= static_cast<int>(nz.size()) && s2.empty(); ++k) {
    for_each_subset(nz, k, [&](const std::vector<Vertex>& pick) {
      ++out.stats.cases;
      VertexSet reached;
      for (Vertex u : pick) reached = set_union(reached, g.independent_neighbors(u));
      if (!is_subset(r2, reached)) return false;
      s2 = make_vertex_set(pick);
      return true;
    });
  }
  if (s2.empty()) throw Infeasible("root neighborhood cannot cover the remaining leaves");
  out.stats.anchors = static_cast<int>(s2.size());
  out.steiner_set = set_union(make_vertex_set(std::move(s1)), s2);
  return out;
}

SteinerSolution solve_comb_convex_I_xp(const ProblemInstance& instance) {
  require_kind_on_I(instance, StructureKind::Comb);
  const SplitGraph& g = instance.graph;
  require_neighbors(g);
  const auto& comb = *instance.structure->get_if<CombLayout>();
  const int l = static_cast<int>(comb.backbone.size());
  const VertexSet backbone = make_vertex_set(comb.backbone);

  std::vector<Vertex> touching;
  std::map<Vertex, Vertex> tooth_only;  // tooth -> smallest clique vertex seeing just it
  for (Vertex u : g.clique()) {
    const VertexSet& nu = g.independent_neighbors(u);
    if (!set_intersection(nu, backbone).empty()) {
      touching.push_back(u);
    } else if (nu.size() == 1) {
      tooth_only.emplace(nu.front(), u);
    }
  }

  SteinerSolution out;
  out.method = "comb-xp";
  std::optional<VertexSet> best;
  const int limit = std::min<int>(2 * l, static_cast<int>(touching.size()));
  for (int k = 1; k <= limit; ++k) {
    if (best && k >= static_cast<int>(best->size())) break;
    for_each_subset(touching, k, [&](const std::vector<Vertex>& pick) {
      ++out.stats.cases;
      VertexSet reached;
      for (Vertex u : pick) reached = set_union(reached, g.independent_neighbors(u));
      if (!is_subset(backbone, reached)) return false;
      std::vector<Vertex> candidate = pick;
      for (Vertex t : comb.teeth) {
        if (contains(reached, t)) continue;
        const auto it = tooth_only.find(t);
        if (it == tooth_only.end()) {
          ++out.stats.skipped_cases;
          return false;
        }
        candidate.push_back(it->second);
      }
      if (!best || candidate.size() < best->size()) {
        best = make_vertex_set(std::move(candidate));
        out.stats.anchors = k;
      }
      return false;
    });
  }
  if (!best) throw Infeasible("no anchor set covers the backbone");
  out.steiner_set = std::move(*best);
  return out;
}

StarKernel kernelize_star_pendant(const ProblemInstance& instance, int budget) {
  require_kind_on_I(instance, StructureKind::Star);
  const SplitGraph& g = instance.graph;
  require_neighbors(g);
  if (budget < 0) throw BudgetExhausted("negative budget");
  const auto& star = *instance.structure->get_if<StarLayout>();

  StarKernel out;
  out.leaves = static_cast<int>(star.leaves.size());
  std::vector<Vertex> forced;
  for (Vertex y : g.independent()) {
    if (g.clique_neighbors(y).size() == 1) forced.push_back(g.clique_neighbors(y).front());
  }
  out.forced = make_vertex_set(std::move(forced));
  out.budget = budget - static_cast<int>(out.forced.size());
  if (out.budget < 0) {
    throw BudgetExhausted(std::to_string(out.forced.size()) + " forced vertices exceed budget " +
                          std::to_string(budget));
  }

  VertexSet gone;
  for (Vertex f : out.forced) gone = set_union(gone, g.independent_neighbors(f));
  const VertexSet keep_i = set_difference(g.independent(), gone);

  // Survivors: nonempty residual neighborhood, not dominated by another one.
  std::vector<std::pair<Vertex, VertexSet>> residual;
  for (Vertex u : g.clique()) {
    if (contains(out.forced, u)) continue;
    VertexSet r = set_intersection(g.independent_neighbors(u), keep_i);
    if (!r.empty()) residual.emplace_back(u, std::move(r));
  }
  std::vector<Vertex> keep_k;
  for (const auto& [u, ru] : residual) {
    bool dominated = false;
    for (const auto& [v, rv] : residual) {
      if (v == u || !is_subset(ru, rv)) continue;
      if (ru.size() < rv.size() || v < u) dominated = true;
    }
    if (!dominated) keep_k.push_back(u);
  }

  InducedSubgraph sub = induced_subgraph(g, keep_k, keep_i);
  out.origin = sub.origin;
  std::vector<Vertex> to_new(g.order(), -1);
  for (std::size_t i = 0; i < sub.origin.size(); ++i) to_new[sub.origin[i]] = static_cast<Vertex>(i);
  out.kernel = covering_instance(std::move(sub.graph), remap_structure(*instance.structure, to_new));
  out.kernel.budget = out.budget;

  // Leaf signatures are taken on the residual neighborhoods; survivors seeing
  // only the root are not counted.
  const VertexSet leaves = make_vertex_set(star.leaves);
  for (Vertex u : keep_k) {
    if (!set_intersection(set_intersection(g.independent_neighbors(u), keep_i), leaves).empty()) {
      ++out.candidates;
    }
  }
  return out;
}

VertexSet lift_star_kernel(const StarKernel& kernel, const VertexSet& kernel_solution) {
  std::vector<Vertex> out(kernel.forced.begin(), kernel.forced.end());
  for (Vertex v : kernel_solution) {
    if (v < 0 || v >= static_cast<Vertex>(kernel.origin.size())) {
      throw CorruptCertificate("kernel solution uses an unknown vertex");
    }
    out.push_back(kernel.origin[v]);
  }
  return make_vertex_set(std::move(out));
}

}  // namespace splitsteiner
