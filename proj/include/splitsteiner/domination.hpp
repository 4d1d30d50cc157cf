#pragma once

#include <functional>

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

using SteinerSolver = std::function<SteinerSolution(const ProblemInstance&)>;

struct DominationResult {
  VertexSet set;            ///< ⊆ K
  bool connected = false;   ///< G[set] connected (always, since set is a clique)
  bool total = false;       ///< every vertex of the graph has a neighbor in set
  /// |set| = 1: G[set] is a single vertex, so the set cannot be total.
  bool total_degenerate = false;
  SteinerSolution steiner;  ///< what the solver returned
};

/// Runs `solver` on (graph, structure, R = I) and reads its Steiner set as a
/// dominating set. With fewer than two I-vertices the Steiner set is empty;
/// one clique vertex (a neighbor of the lone I-vertex if there is one) is
/// used instead. Solver errors propagate.
DominationResult ds_via_stree(const SplitGraph& graph, const std::optional<ConvexStructure>& structure,
                              const SteinerSolver& solver);

/// Replaces every I-vertex of a dominating set by its smallest clique
/// neighbor. The result is a subset of K no larger than D and still
/// dominating. Throws InvalidParameter if D is not dominating.
VertexSet push_ds_into_clique(const SplitGraph& graph, const VertexSet& dominating_set);

/// The identity transform from a dominating-set instance (G, k) to the
/// Steiner instance (G, R = I, k).
ProblemInstance ds_to_stree(const SplitGraph& graph, std::optional<int> budget = {});

struct ApproxSteiner {
  SteinerSolution solution;
  std::vector<Edge> tree;  ///< edges of the final tree; tree.size() is the edge cost
};

/// Distance-network heuristic on unit weights: BFS distances between
/// terminals, a minimum spanning tree of that metric, every tree edge
/// expanded into a shortest path, a spanning tree of the union, then
/// non-terminal leaves are pruned and Steiner vertices whose removal keeps
/// the terminals connected are dropped (largest id first).
/// Throws EmptyTerminals, Disconnected.
ApproxSteiner approx_steiner(const SplitGraph& graph, const VertexSet& terminals);

/// approx_steiner with R = I, pushed into K.
VertexSet approx_dominating_set(const SplitGraph& graph);

}  // namespace splitsteiner
