#pragma once

#include <map>

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

/// Depth of every vertex of a tree-shaped structure, measured from root().
std::map<Vertex, int> structure_depths(const ConvexStructure& structure);

/// Minimum covering set for a split graph that is tree-convex on K, R = I.
/// Leaves of the imaginary tree are peeled deepest first (then by index):
/// a leaf with a pendant I-neighbor in the current graph joins S and takes
/// its I-neighbors with it, any other leaf is simply deleted. The root is
/// added at the end if some I-vertex is still uncovered.
/// Accepts path, star, comb, triad and tree structures on K.
/// Throws StructureMismatch, TerminalsNotIndependentSet, Infeasible.
SteinerSolution solve_tree_convex_K(const ProblemInstance& instance);

}  // namespace splitsteiner
