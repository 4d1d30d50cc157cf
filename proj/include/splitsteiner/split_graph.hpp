#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace splitsteiner {

/// Vertex id. Clique vertices are 0..m-1, independent vertices m..m+n-1.
using Vertex = int;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

enum class Side { Clique, Independent };

VertexSet make_vertex_set(std::vector<Vertex> vertices);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);

/// A connected-or-not graph whose vertices split into a clique K and an
/// independent set I. Clique edges are implicit; only the K-I incidences are
/// stored, from both sides.
class SplitGraph {
 public:
  enum class CliqueEdges { Implicit, Explicit };

  SplitGraph() = default;

  /// Validated construction. Edges use global ids. In Explicit mode every K-K
  /// pair must be listed; in Implicit mode K-K edges may be given or omitted.
  /// Throws PartitionViolation or Disconnected.
  static SplitGraph build(int clique_count, int independent_count,
                          std::span<const Edge> edges,
                          CliqueEdges mode = CliqueEdges::Implicit);

  /// Builds from the independent neighborhood of every clique vertex. Ids in
  /// the lists are global (>= clique_count). Connectivity is not checked; used
  /// for derived and intermediate instances.
  static SplitGraph from_neighborhoods(int clique_count, int independent_count,
                                       std::vector<VertexSet> independent_neighborhoods);

  int clique_size() const noexcept { return m_; }
  int independent_size() const noexcept { return n_; }
  int order() const noexcept { return m_ + n_; }

  bool in_clique(Vertex v) const noexcept { return v >= 0 && v < m_; }
  bool in_independent(Vertex v) const noexcept { return v >= m_ && v < m_ + n_; }
  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < m_ + n_; }
  Side side_of(Vertex v) const noexcept {
    return in_clique(v) ? Side::Clique : Side::Independent;
  }

  Vertex independent_vertex(int j) const noexcept { return m_ + j; }
  VertexSet clique() const;
  VertexSet independent() const;
  VertexSet side(Side s) const { return s == Side::Clique ? clique() : independent(); }

  bool adjacent(Vertex u, Vertex v) const;
  /// N^I(u) for u in K.
  const VertexSet& independent_neighbors(Vertex u) const { return k_to_i_.at(u); }
  /// N^K(x) for x in I.
  const VertexSet& clique_neighbors(Vertex x) const { return i_to_k_.at(x - m_); }
  VertexSet neighbors(Vertex v) const;
  int degree(Vertex v) const;
  /// Largest N^K over I (d in the kernel bounds); 0 for empty I.
  int max_independent_degree() const;

  bool is_connected() const;
  /// Every K-I edge once, as (clique, independent).
  std::vector<Edge> cross_edges() const;

  /// w1..wm, x1..xn labels.
  std::string label(Vertex v) const;

  friend bool operator==(const SplitGraph&, const SplitGraph&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<VertexSet> k_to_i_;
  std::vector<VertexSet> i_to_k_;
};

/// True iff S and R are disjoint and G[S u R] is connected (breadth-first).
bool verify_steiner(const SplitGraph& graph, const VertexSet& terminals,
                    const VertexSet& steiner_set);

/// Result of taking the subgraph induced on a subset of each side.
struct InducedSubgraph {
  SplitGraph graph;
  std::vector<Vertex> origin;  ///< new id -> parent id
};

InducedSubgraph induced_subgraph(const SplitGraph& graph, const VertexSet& keep_clique,
                                 const VertexSet& keep_independent);

}  // namespace splitsteiner
