#include "splitsteiner/solver_tree_k.hpp"

#include <algorithm>
#include <queue>

#include "splitsteiner/errors.hpp"
#include "splitsteiner/solver_path.hpp"

namespace splitsteiner {

std::map<Vertex, int> structure_depths(const ConvexStructure& structure) {
  const auto root = structure.root();
  if (!structure.is_tree_shaped() || !root) {
    throw StructureMismatch("depths need a tree-shaped structure");
  }
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [a, b] : structure.imaginary_edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<Vertex, int> depth{{*root, 0}};
  std::queue<Vertex> frontier;
  frontier.push(*root);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : adj[v]) {
      if (depth.emplace(u, depth[v] + 1).second) frontier.push(u);
    }
  }
  return depth;
}

SteinerSolution solve_tree_convex_K(const ProblemInstance& instance) {
  const auto& s = instance.structure;
  if (!s || s->side() != Side::Clique || !s->is_tree_shaped()) {
    throw StructureMismatch("tree solver needs a tree-shaped structure on K");
  }
  const auto report = verify_convexity(instance.graph, *s);
  if (!report.valid) {
    throw StructureMismatch("graph is not tree-convex on K: " + report.violations.front().reason);
  }
  require_terminals_are_independent_set(instance);

  const SplitGraph& g = instance.graph;
  SteinerSolution out;
  out.method = "tree-k";
  if (g.clique_size() == 0) {
    if (g.independent_size() > 0) throw Infeasible("no clique vertex to cover I");
    return out;
  }
  for (Vertex x : g.independent()) {
    if (g.clique_neighbors(x).empty()) throw Infeasible(g.label(x) + " has no clique neighbor");
  }

  const auto depth = structure_depths(*s);
  const Vertex root = *s->root();
  std::vector<Vertex> peel;
  for (Vertex u : g.clique()) {
    if (u != root) peel.push_back(u);
  }
  std::sort(peel.begin(), peel.end(), [&](Vertex a, Vertex b) {
    const int da = depth.at(a), db = depth.at(b);
    return da != db ? da > db : a < b;
  });

  const int m = g.clique_size();
  std::vector<char> alive_i(g.independent_size(), 1);
  std::vector<int> degree(g.independent_size());
  for (Vertex x : g.independent()) degree[x - m] = static_cast<int>(g.clique_neighbors(x).size());

  std::vector<Vertex> black;
  for (Vertex u : peel) {
    bool pendant = false;
    for (Vertex x : g.independent_neighbors(u)) {
      if (alive_i[x - m] && degree[x - m] == 1) pendant = true;
    }
    if (pendant) {
      black.push_back(u);
      for (Vertex x : g.independent_neighbors(u)) alive_i[x - m] = 0;
    } else {
      for (Vertex x : g.independent_neighbors(u)) --degree[x - m];
    }
  }
  if (std::find(alive_i.begin(), alive_i.end(), 1) != alive_i.end()) black.push_back(root);
  out.steiner_set = make_vertex_set(std::move(black));
  return out;
}

}  // namespace splitsteiner
