#include "splitsteiner/domination.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "splitsteiner/errors.hpp"
#include "splitsteiner/oracle.hpp"

namespace splitsteiner {

DominationResult ds_via_stree(const SplitGraph& graph, const std::optional<ConvexStructure>& structure,
                              const SteinerSolver& solver) {
  DominationResult out;
  out.steiner = solver(covering_instance(graph, structure));
  out.set = out.steiner.steiner_set;
  if (out.set.empty() && graph.clique_size() > 0) {
    // |I| <= 1: R = I needs no Steiner vertex, but domination needs one
    const auto inds = graph.independent();
    out.set = {inds.empty() || graph.clique_neighbors(inds.front()).empty()
                   ? Vertex{0}
                   : graph.clique_neighbors(inds.front()).front()};
  }
  for (Vertex v : out.set) {
    if (!graph.in_clique(v)) throw CorruptCertificate("solver returned a vertex outside K");
  }
  out.connected = is_dominating(graph, out.set, DominationVariant::Connected);
  out.total = is_dominating(graph, out.set, DominationVariant::Total);
  out.total_degenerate = out.set.size() == 1;
  return out;
}

VertexSet push_ds_into_clique(const SplitGraph& graph, const VertexSet& dominating_set) {
  if (!is_dominating(graph, dominating_set, DominationVariant::Dominating)) {
    throw InvalidParameter("input is not a dominating set");
  }
  std::vector<Vertex> out;
  for (Vertex v : dominating_set) {
    if (graph.in_clique(v)) {
      out.push_back(v);
    } else if (!graph.clique_neighbors(v).empty()) {
      out.push_back(graph.clique_neighbors(v).front());
    } else {
      out.push_back(v);  // isolated I-vertex, nothing to swap with
    }
  }
  return make_vertex_set(std::move(out));
}

ProblemInstance ds_to_stree(const SplitGraph& graph, std::optional<int> budget) {
  ProblemInstance out = covering_instance(graph);
  out.budget = budget;
  return out;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

/// BFS distances and parents; neighbors are visited in increasing id order,
/// so parents (and paths) are deterministic.
void bfs(const SplitGraph& g, Vertex source, std::vector<int>& dist, std::vector<Vertex>& parent) {
  dist.assign(g.order(), kUnreached);
  parent.assign(g.order(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        parent[u] = v;
        q.push(u);
      }
    }
  }
}

bool connects(const SplitGraph& g, const VertexSet& terminals, const std::vector<char>& alive) {
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> q;
  q.push(terminals.front());
  seen[terminals.front()] = 1;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (alive[u] && !seen[u]) {
        seen[u] = 1;
        q.push(u);
      }
    }
  }
  return std::all_of(terminals.begin(), terminals.end(), [&](Vertex t) { return seen[t] != 0; });
}

}  // namespace

ApproxSteiner approx_steiner(const SplitGraph& graph, const VertexSet& terminals) {
  if (terminals.empty()) throw EmptyTerminals("terminal set is empty");
  for (Vertex t : terminals) {
    if (!graph.valid_vertex(t)) throw InvalidParameter("terminal " + std::to_string(t) + " is not a vertex");
  }
  ApproxSteiner out;
  out.solution.method = "approx";
  if (terminals.size() == 1) return out;

  const int r = static_cast<int>(terminals.size());
  std::vector<std::vector<int>> dist(r);
  std::vector<std::vector<Vertex>> parent(r);
  for (int i = 0; i < r; ++i) bfs(graph, terminals[i], dist[i], parent[i]);

  // Prim on the terminal distance network, ties to the smaller index
  std::vector<char> in_tree(r, 0);
  std::vector<int> best(r, kUnreached), link(r, -1);
  best[0] = 0;
  std::vector<char> alive(graph.order(), 0);
  for (int step = 0; step < r; ++step) {
    int pick = -1;
    for (int i = 0; i < r; ++i) {
      if (!in_tree[i] && (pick < 0 || best[i] < best[pick])) pick = i;
    }
    if (best[pick] == kUnreached) throw Disconnected("terminals lie in different components");
    in_tree[pick] = 1;
    alive[terminals[pick]] = 1;
    if (link[pick] >= 0) {
      // expand the network edge into the shortest path from terminals[link]
      for (Vertex v = terminals[pick]; v != -1; v = parent[link[pick]][v]) alive[v] = 1;
    }
    for (int i = 0; i < r; ++i) {
      const int d = dist[pick][terminals[i]];
      if (!in_tree[i] && d < best[i]) {
        best[i] = d;
        link[i] = pick;
      }
    }
  }

  // spanning tree of the union, then prune non-terminal leaves
  std::vector<char> is_terminal(graph.order(), 0);
  for (Vertex t : terminals) is_terminal[t] = 1;
  std::vector<std::vector<Vertex>> adj(graph.order());
  {
    std::vector<char> seen(graph.order(), 0);
    std::queue<Vertex> q;
    q.push(terminals.front());
    seen[terminals.front()] = 1;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex u : graph.neighbors(v)) {
        if (alive[u] && !seen[u]) {
          seen[u] = 1;
          adj[v].push_back(u);
          adj[u].push_back(v);
          q.push(u);
        }
      }
    }
  }
  std::vector<int> deg(graph.order(), 0);
  for (Vertex v = 0; v < graph.order(); ++v) deg[v] = static_cast<int>(adj[v].size());
  std::queue<Vertex> leaves;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (alive[v] && !is_terminal[v] && deg[v] <= 1) leaves.push(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.front();
    leaves.pop();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Vertex u : adj[v]) {
      if (alive[u] && --deg[u] <= 1 && !is_terminal[u]) leaves.push(u);
    }
  }

  // drop redundant Steiner vertices
  for (Vertex v = graph.order() - 1; v >= 0; --v) {
    if (!alive[v] || is_terminal[v]) continue;
    alive[v] = 0;
    if (!connects(graph, terminals, alive)) alive[v] = 1;
  }

  std::vector<Vertex> steiner;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (alive[v] && !is_terminal[v]) steiner.push_back(v);
  }
  out.solution.steiner_set = make_vertex_set(std::move(steiner));
  out.tree = connectivity_witness(graph, terminals, out.solution.steiner_set);
  out.solution.stats.notes.push_back("edge cost " + std::to_string(out.tree.size()));
  return out;
}

VertexSet approx_dominating_set(const SplitGraph& graph) {
  const VertexSet inds = graph.independent();
  if (inds.size() <= 1) {
    if (graph.clique_size() == 0) return inds;
    if (inds.empty() || graph.clique_neighbors(inds.front()).empty()) return {0};
    return {graph.clique_neighbors(inds.front()).front()};
  }
  const VertexSet s = approx_steiner(graph, inds).solution.steiner_set;
  return push_ds_into_clique(graph, s.empty() ? VertexSet{0} : s);
}

}  // namespace splitsteiner
