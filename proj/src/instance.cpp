#include "splitsteiner/instance.hpp"

#include <queue>

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

void validate_instance(const ProblemInstance& instance) {
  const auto& g = instance.graph;
  for (Vertex v : instance.terminals) {
    if (!g.valid_vertex(v)) throw InvalidParameter("terminal " + std::to_string(v) + " is not a vertex");
  }
  if (instance.budget && (*instance.budget < 0 || *instance.budget > g.order())) {
    throw InvalidParameter("budget must lie in [0, |V|]");
  }
}

ProblemInstance covering_instance(SplitGraph graph, std::optional<ConvexStructure> structure) {
  ProblemInstance out;
  out.terminals = graph.independent();
  out.graph = std::move(graph);
  out.structure = std::move(structure);
  return out;
}

std::vector<Edge> connectivity_witness(const SplitGraph& graph, const VertexSet& terminals,
                                       const VertexSet& steiner_set) {
  const VertexSet members = set_union(terminals, steiner_set);
  std::vector<Edge> tree;
  if (members.size() <= 1) return tree;
  std::vector<char> seen(graph.order(), 0);
  std::queue<Vertex> frontier;
  frontier.push(members.front());
  seen[members.front()] = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : graph.neighbors(v)) {
      if (!seen[u] && contains(members, u)) {
        seen[u] = 1;
        tree.emplace_back(v, u);
        frontier.push(u);
      }
    }
  }
  if (tree.size() + 1 != members.size()) tree.clear();
  return tree;
}

NormalizedInstance normalize_terminals(const ProblemInstance& instance) {
  validate_instance(instance);
  const SplitGraph& g = instance.graph;
  const VertexSet& r = instance.terminals;
  if (r.empty()) throw EmptyTerminals("terminal set is empty");

  NormalizedInstance out;
  const VertexSet w = set_intersection(r, g.clique());
  const VertexSet r_independent = set_difference(r, w);
  if (r.size() == 1 || r_independent.empty()) {
    out.trivial = true;
    out.mandated = w;
    return out;
  }

  VertexSet covered_by_w;
  for (Vertex u : w) covered_by_w = set_union(covered_by_w, g.independent_neighbors(u));
  const VertexSet keep_k = set_difference(g.clique(), w);
  const VertexSet keep_i = set_difference(r_independent, covered_by_w);

  InducedSubgraph sub = induced_subgraph(g, keep_k, keep_i);
  out.mandated = w;
  out.origin = sub.origin;
  out.instance.graph = std::move(sub.graph);
  out.instance.terminals = out.instance.graph.independent();
  if (keep_i.empty()) {
    // W already reaches every terminal through the clique.
    out.trivial = true;
    return out;
  }

  if (instance.structure) {
    const bool untouched =
        instance.structure->side() == Side::Clique ? w.empty() : keep_i == g.independent();
    std::vector<Vertex> to_new(g.order(), -1);
    for (std::size_t i = 0; i < out.origin.size(); ++i) to_new[out.origin[i]] = static_cast<Vertex>(i);
    std::optional<ConvexStructure> mapped;
    try {
      mapped = remap_structure(*instance.structure, to_new);
    } catch (const InvalidLayout&) {
      mapped.reset();
    }
    if (!mapped && untouched) {
      throw InvalidLayout("structure could not be renumbered");
    }
    out.instance.structure = std::move(mapped);
    out.structure_dropped = !out.instance.structure.has_value();
  }
  return out;
}

VertexSet lift_normalized(const NormalizedInstance& normalized, const VertexSet& solution) {
  std::vector<Vertex> out;
  out.reserve(solution.size());
  for (Vertex v : solution) {
    if (v < 0 || v >= static_cast<Vertex>(normalized.origin.size())) {
      throw CorruptCertificate("normalized solution uses an unknown vertex");
    }
    out.push_back(normalized.origin[v]);
  }
  return make_vertex_set(std::move(out));
}

bool covers_independent(const SplitGraph& graph, const VertexSet& clique_subset) {
  std::vector<char> hit(graph.independent_size(), 0);
  int count = 0;
  for (Vertex u : clique_subset) {
    if (!graph.in_clique(u)) continue;
    for (Vertex x : graph.independent_neighbors(u)) {
      if (!hit[x - graph.clique_size()]) {
        hit[x - graph.clique_size()] = 1;
        ++count;
      }
    }
  }
  return count == graph.independent_size();
}

}  // namespace splitsteiner
