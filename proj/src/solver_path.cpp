#include "splitsteiner/solver_path.hpp"

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

namespace {

const PathLayout& require_path_on_I(const ProblemInstance& instance) {
  const auto& s = instance.structure;
  if (!s || s->kind() != StructureKind::Path || s->side() != Side::Independent) {
    throw StructureMismatch("path solver needs a path structure on I");
  }
  const auto report = verify_convexity(instance.graph, *s);
  if (!report.valid) {
    throw StructureMismatch("graph is not path-convex on I: " + report.violations.front().reason);
  }
  return *s->get_if<PathLayout>();
}

}  // namespace

void require_terminals_are_independent_set(const ProblemInstance& instance) {
  if (instance.terminals != instance.graph.independent()) {
    throw TerminalsNotIndependentSet("solver expects R = I; normalize the terminals first");
  }
}

Vertex alpha(const SplitGraph& graph, const ConvexStructure& path, Vertex x) {
  const auto* layout = path.get_if<PathLayout>();
  if (layout == nullptr) throw StructureMismatch("alpha needs a path structure");
  const auto& nbhd = graph.clique_neighbors(x);
  if (nbhd.empty()) throw EmptyNeighborhood(graph.label(x) + " has no neighbor");
  std::vector<int> position(graph.order(), -1);
  for (std::size_t i = 0; i < layout->order.size(); ++i) position[layout->order[i]] = static_cast<int>(i);
  Vertex best = -1;
  int best_reach = -1;
  for (Vertex u : nbhd) {
    int reach = -1;
    for (Vertex y : graph.independent_neighbors(u)) reach = std::max(reach, position[y]);
    if (reach > best_reach) {
      best = u;
      best_reach = reach;
    }
  }
  return best;
}

std::vector<Vertex> path_greedy_sequence(const SplitGraph& graph, const std::vector<Vertex>& order) {
  std::vector<int> position(graph.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  // r(u) for every clique vertex, restricted to the ordered vertices.
  std::vector<int> reach(graph.clique_size(), -1);
  for (Vertex u = 0; u < graph.clique_size(); ++u) {
    for (Vertex y : graph.independent_neighbors(u)) reach[u] = std::max(reach[u], position[y]);
  }

  std::vector<Vertex> picks;
  std::vector<char> marked(order.size(), 0);
  std::size_t next = 0;
  while (true) {
    while (next < order.size() && marked[next]) ++next;
    if (next == order.size()) break;
    const Vertex c = order[next];
    Vertex best = -1;
    for (Vertex u : graph.clique_neighbors(c)) {
      if (best < 0 || reach[u] > reach[best]) best = u;
    }
    if (best < 0) throw Infeasible(graph.label(c) + " has no clique neighbor");
    picks.push_back(best);
    for (Vertex y : graph.independent_neighbors(best)) {
      if (position[y] >= 0) marked[position[y]] = 1;
    }
  }
  return picks;
}

SteinerSolution solve_path_convex_I(const ProblemInstance& instance) {
  const PathLayout& layout = require_path_on_I(instance);
  require_terminals_are_independent_set(instance);
  SteinerSolution out;
  out.method = "path";
  out.stats.path_solver_calls = 1;
  out.steiner_set = make_vertex_set(path_greedy_sequence(instance.graph, layout.order));
  return out;
}

}  // namespace splitsteiner
