#pragma once

#include <optional>

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

/// Smallest id of every class of clique vertices with identical N^I.
VertexSet clique_twin_representatives(const SplitGraph& graph);

/// Star-convex on I with every I-degree at most d (default: the graph's own
/// maximum). Leaves whose neighborhood misses N(z) each take one private
/// neighbor; the rest are covered by the smallest nonempty subset of N(z)
/// that reaches them, found exhaustively. Twins are collapsed first.
/// Throws StructureMismatch, TerminalsNotIndependentSet, DegreeBoundViolated.
SteinerSolution solve_star_convex_I_bounded(const ProblemInstance& instance,
                                            std::optional<int> degree_bound = {});

/// Comb-convex on I. Tries every set A of backbone-touching clique vertices
/// with |A| <= 2l that covers the backbone; each tooth A misses needs a
/// clique vertex that sees only that tooth. O(n^{2l}) cases.
/// Throws StructureMismatch, TerminalsNotIndependentSet, Infeasible.
SteinerSolution solve_comb_convex_I_xp(const ProblemInstance& instance);

/// Result of the pendant-vertex kernel for star-convex instances.
struct StarKernel {
  ProblemInstance kernel;      ///< R = I, budget = k'
  int budget = 0;              ///< k' = k - |forced|
  VertexSet forced;            ///< the unique neighbors of degree-1 I-vertices
  std::vector<Vertex> origin;  ///< kernel id -> original id
  int candidates = 0;          ///< kernel clique vertices that see some leaf
  int leaves = 0;              ///< l, leaves of the original star
};

/// Forces the neighbor of every degree-1 I-vertex, deletes what it covers,
/// then drops clique vertices that see nothing or are dominated by another
/// (twins keep the smaller id). Distinct survivors have distinct leaf
/// signatures, so at most 2^l - 1 of them see a leaf.
/// Throws StructureMismatch, TerminalsNotIndependentSet, BudgetExhausted.
StarKernel kernelize_star_pendant(const ProblemInstance& instance, int budget);

/// forced ∪ kernel solution mapped back.
VertexSet lift_star_kernel(const StarKernel& kernel, const VertexSet& kernel_solution);

}  // namespace splitsteiner
