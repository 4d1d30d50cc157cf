#include "splitsteiner/split_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

SplitGraph SplitGraph::build(int clique_count, int independent_count,
                             std::span<const Edge> edges, CliqueEdges mode) {
  if (clique_count < 0 || independent_count < 0) {
    throw PartitionViolation("negative part size");
  }
  const int total = clique_count + independent_count;
  std::vector<VertexSet> nbhd(clique_count);
  std::set<Edge> clique_pairs;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= total || v >= total) {
      throw PartitionViolation("edge endpoint out of range: " + std::to_string(u) + " " +
                               std::to_string(v));
    }
    if (u == v) throw PartitionViolation("self loop at " + std::to_string(u));
    const bool uk = u < clique_count;
    const bool vk = v < clique_count;
    if (!uk && !vk) {
      throw PartitionViolation("edge inside the independent set: " + std::to_string(u) + " " +
                               std::to_string(v));
    }
    if (uk && vk) {
      clique_pairs.emplace(std::min(u, v), std::max(u, v));
      continue;
    }
    if (uk) {
      nbhd[u].push_back(v);
    } else {
      nbhd[v].push_back(u);
    }
  }
  if (mode == CliqueEdges::Explicit) {
    for (int a = 0; a < clique_count; ++a) {
      for (int b = a + 1; b < clique_count; ++b) {
        if (!clique_pairs.contains({a, b})) {
          throw PartitionViolation("missing clique edge " + std::to_string(a) + " " +
                                   std::to_string(b));
        }
      }
    }
  }
  for (auto& list : nbhd) list = make_vertex_set(std::move(list));
  SplitGraph g = from_neighborhoods(clique_count, independent_count, std::move(nbhd));
  if (!g.is_connected()) throw Disconnected("split graph is not connected");
  return g;
}

SplitGraph SplitGraph::from_neighborhoods(int clique_count, int independent_count,
                                          std::vector<VertexSet> independent_neighborhoods) {
  if (static_cast<int>(independent_neighborhoods.size()) != clique_count) {
    throw PartitionViolation("neighborhood list size differs from clique size");
  }
  SplitGraph g;
  g.m_ = clique_count;
  g.n_ = independent_count;
  g.k_to_i_ = std::move(independent_neighborhoods);
  g.i_to_k_.assign(independent_count, {});
  for (int u = 0; u < clique_count; ++u) {
    auto& list = g.k_to_i_[u];
    list = make_vertex_set(std::move(list));
    for (Vertex x : list) {
      if (!g.in_independent(x)) {
        throw PartitionViolation("clique vertex " + std::to_string(u) +
                                 " lists a non-independent neighbor " + std::to_string(x));
      }
      g.i_to_k_[x - clique_count].push_back(u);
    }
  }
  return g;
}

VertexSet SplitGraph::clique() const {
  VertexSet out(m_);
  for (int i = 0; i < m_; ++i) out[i] = i;
  return out;
}

VertexSet SplitGraph::independent() const {
  VertexSet out(n_);
  for (int j = 0; j < n_; ++j) out[j] = m_ + j;
  return out;
}

bool SplitGraph::adjacent(Vertex u, Vertex v) const {
  if (u == v || !valid_vertex(u) || !valid_vertex(v)) return false;
  if (in_clique(u) && in_clique(v)) return true;
  if (in_independent(u) && in_independent(v)) return false;
  if (in_clique(u)) return contains(k_to_i_[u], v);
  return contains(k_to_i_[v], u);
}

VertexSet SplitGraph::neighbors(Vertex v) const {
  if (in_independent(v)) return clique_neighbors(v);
  VertexSet out;
  out.reserve(m_ - 1 + k_to_i_[v].size());
  for (int u = 0; u < m_; ++u) {
    if (u != v) out.push_back(u);
  }
  out.insert(out.end(), k_to_i_[v].begin(), k_to_i_[v].end());
  return out;
}

int SplitGraph::degree(Vertex v) const {
  if (in_independent(v)) return static_cast<int>(clique_neighbors(v).size());
  return m_ - 1 + static_cast<int>(k_to_i_.at(v).size());
}

int SplitGraph::max_independent_degree() const {
  int d = 0;
  for (const auto& list : i_to_k_) d = std::max(d, static_cast<int>(list.size()));
  return d;
}

bool SplitGraph::is_connected() const {
  if (order() == 0) return true;
  if (m_ == 0) return n_ == 1;
  for (const auto& list : i_to_k_) {
    if (list.empty()) return false;
  }
  return true;
}

std::vector<Edge> SplitGraph::cross_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < m_; ++u) {
    for (Vertex x : k_to_i_[u]) out.emplace_back(u, x);
  }
  return out;
}

std::string SplitGraph::label(Vertex v) const {
  if (in_clique(v)) return "w" + std::to_string(v + 1);
  if (in_independent(v)) return "x" + std::to_string(v - m_ + 1);
  return "?" + std::to_string(v);
}

bool verify_steiner(const SplitGraph& graph, const VertexSet& terminals,
                    const VertexSet& steiner_set) {
  if (!set_intersection(terminals, steiner_set).empty()) return false;
  const VertexSet members = set_union(terminals, steiner_set);
  for (Vertex v : members) {
    if (!graph.valid_vertex(v)) return false;
  }
  if (members.size() <= 1) return true;

  std::vector<char> in_set(graph.order(), 0);
  for (Vertex v : members) in_set[v] = 1;
  std::vector<char> seen(graph.order(), 0);
  std::queue<Vertex> frontier;
  frontier.push(members.front());
  seen[members.front()] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : graph.neighbors(v)) {
      if (in_set[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == members.size();
}

InducedSubgraph induced_subgraph(const SplitGraph& graph, const VertexSet& keep_clique,
                                 const VertexSet& keep_independent) {
  const int m = static_cast<int>(keep_clique.size());
  const int n = static_cast<int>(keep_independent.size());
  std::vector<Vertex> to_new(graph.order(), -1);
  InducedSubgraph out;
  out.origin.reserve(m + n);
  for (int i = 0; i < m; ++i) {
    to_new[keep_clique[i]] = i;
    out.origin.push_back(keep_clique[i]);
  }
  for (int j = 0; j < n; ++j) {
    to_new[keep_independent[j]] = m + j;
    out.origin.push_back(keep_independent[j]);
  }
  std::vector<VertexSet> nbhd(m);
  for (int i = 0; i < m; ++i) {
    for (Vertex x : graph.independent_neighbors(keep_clique[i])) {
      if (to_new[x] >= 0) nbhd[i].push_back(to_new[x]);
    }
  }
  out.graph = SplitGraph::from_neighborhoods(m, n, std::move(nbhd));
  return out;
}

}  // namespace splitsteiner
