#pragma once

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

struct OracleOptions {
  int cap = 20;  ///< refuse graphs with more vertices than this
  /// Only try Steiner vertices from K. Sound because an I-vertex outside R
  /// only ever links clique vertices that are adjacent anyway; the full
  /// space is the default so the oracle stays a plain brute force.
  bool clique_only = false;
};

/// Smallest S ⊆ V \ R with G[S ∪ R] connected, found by trying subsets in
/// increasing size, lexicographically. Uses its own bitmask connectivity
/// test rather than verify_steiner. Throws CapExceeded, EmptyTerminals.
SteinerSolution oracle_min_steiner(const SplitGraph& graph, const VertexSet& terminals,
                                   const OracleOptions& options = {});

/// Smallest S ⊆ K such that every I-vertex has a neighbor in S. This is the
/// covering problem the R = I solvers answer. Throws CapExceeded,
/// Infeasible when some I-vertex has no neighbor.
VertexSet oracle_min_cover(const SplitGraph& graph, const OracleOptions& options = {});

/// Every minimum covering set, for property checks on small graphs.
std::vector<VertexSet> oracle_all_min_covers(const SplitGraph& graph,
                                             const OracleOptions& options = {});

enum class DominationVariant { Dominating, Connected, Total };

/// Minimum dominating / connected dominating / total dominating set.
/// Throws CapExceeded; Infeasible for TDS when a vertex is isolated.
VertexSet oracle_min_dominating(const SplitGraph& graph, DominationVariant variant,
                                const OracleOptions& options = {});

bool is_dominating(const SplitGraph& graph, const VertexSet& set, DominationVariant variant);

}  // namespace splitsteiner
