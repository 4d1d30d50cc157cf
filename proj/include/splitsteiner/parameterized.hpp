#pragma once

#include <optional>

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

struct BranchStats {
  long branch_nodes = 0;  ///< binary include/exclude decisions
  long leaves = 0;        ///< search-tree leaves
  long forced = 0;        ///< includes forced by an I-vertex with one candidate left
};

/// Covering set of size <= k for R = I, or nullopt. Branches on the live
/// clique vertex seeing the most uncovered I-vertices (ties: smallest id):
/// include it (k - 1) or delete it. An uncovered I-vertex with a single live
/// neighbor forces that neighbor in. Leaves never exceed 2^|K|.
std::optional<VertexSet> fpt_branch_solve(const SplitGraph& graph, int budget,
                                          BranchStats* stats = nullptr);

/// Smallest k for which fpt_branch_solve succeeds, with its solution.
SteinerSolution fpt_min(const SplitGraph& graph);

// Degree normalization and the hitting-set kernel ----------------------------

/// Padding clique vertex -> the I-vertex (original id) it was added for.
struct PaddingMap {
  int original_clique = 0;
  std::vector<Vertex> serves;  ///< indexed by padding id - original_clique
};

struct NormalizedDegrees {
  SplitGraph graph;   ///< original K, then padding, then I (shifted)
  PaddingMap padding;
  int degree = 0;     ///< d, now the degree of every I-vertex
};

/// Adds d - deg(y) padding clique vertices next to every I-vertex y of
/// degree below d = max I-degree. Padding ids follow the original clique;
/// I-vertex ids shift by the amount of padding.
NormalizedDegrees normalize_degrees(const SplitGraph& graph);

struct KernelCertificate {
  PaddingMap padding;
  std::vector<Vertex> kernel_to_padded;  ///< kernel clique id -> padded clique id
  VertexSet forced;                      ///< padded clique ids picked by reduction
  int budget_delta = 0;                  ///< k - k'
};

struct HittingSetKernel {
  ProblemInstance kernel;  ///< R = I, budget k'
  KernelCertificate certificate;
  int degree = 0;
  long sunflowers = 0;     ///< sunflower reductions applied
  long reduced_order = 0;  ///< elements left once the rules stop firing (before any fallback)
  bool fallback = false;   ///< reductions stalled above the bound; solved exactly instead
};

/// Order bound of the kernel: (2d - 1) k^(d-1) + k.
long hitting_set_kernel_bound(int d, int k);

/// Treats every N(x) as a set over the clique and reduces the family:
/// duplicate and superset sets go, dominated elements go (padding first),
/// a sunflower with k + 1 petals is replaced by its core, a singleton set
/// forces its element, and more than k * (max element frequency) sets means
/// no. If the element count still exceeds the bound the instance is solved
/// by d-ary branching and a trivial kernel is returned.
/// The input must come from normalize_degrees (uniform degree d).
/// Throws NoInstance.
HittingSetKernel kernelize_hitting_set(const NormalizedDegrees& normalized, int budget);

/// Lifts a kernel solution to the original graph: kernel ids go back to the
/// padded graph, forced picks are added, and padding vertices are replaced
/// by a real neighbor of the I-vertex they served.
/// Throws CorruptCertificate if ids are out of range or the result does not
/// cover the original graph.
VertexSet lift_solution(const KernelCertificate& certificate, const SplitGraph& original,
                        const VertexSet& kernel_solution);

}  // namespace splitsteiner
