#pragma once

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

/// Neighbor of x with the furthest right endpoint under the path order on I;
/// ties go to the smallest K index. Throws EmptyNeighborhood.
Vertex alpha(const SplitGraph& graph, const ConvexStructure& path, Vertex x);

/// The greedy picks in the order they are made. `order` lists the
/// I-vertices left to right; I-vertices missing from it are ignored.
/// Throws Infeasible when a vertex of the order has no neighbor.
std::vector<Vertex> path_greedy_sequence(const SplitGraph& graph, const std::vector<Vertex>& order);

/// Minimum covering set for a split graph that is path-convex on I, R = I.
/// Start from the leftmost unmarked vertex c, pick alpha(c), mark everything
/// it sees, repeat until all of I is marked.
/// Throws StructureMismatch (no path on I, or the path is not a valid
/// convex layout), TerminalsNotIndependentSet, Infeasible.
SteinerSolution solve_path_convex_I(const ProblemInstance& instance);

/// Shared precondition for the R = I solvers.
void require_terminals_are_independent_set(const ProblemInstance& instance);

}  // namespace splitsteiner
