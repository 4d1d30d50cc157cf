#pragma once

#include <random>

#include "splitsteiner/reductions.hpp"

namespace splitsteiner {

using Rng = std::mt19937_64;

/// Largest neighborhood a generated vertex gets on the structured side;
/// 0 picks something small relative to the side.
struct SpanLimit {
  int max_span = 0;
};

// Structures on I: every clique vertex sees a random connected piece of the
// imaginary structure, and I-vertices nobody sees are reached by stretching
// some clique vertex's piece along a shortest path. All results are R = I.

/// Path-convex on I; the path order is a random permutation of I.
ProblemInstance random_path_convex_I(Rng& rng, int clique, int independent, SpanLimit span = {});
/// Circular-convex on I.
ProblemInstance random_circular_convex_I(Rng& rng, int clique, int independent, SpanLimit span = {});
/// Triad-convex on I; every leg has `leg_length` >= 2 vertices.
/// Throws InvalidParameter.
ProblemInstance random_triad_convex_I(Rng& rng, int clique, int leg_length, SpanLimit span = {});
/// Star-convex on I with `leaves` leaves. With a degree bound, no I-vertex
/// gets more than that many clique neighbors.
ProblemInstance random_star_convex_I(Rng& rng, int clique, int leaves,
                                     std::optional<int> degree_bound = {});
/// Comb-convex on I with a backbone of `backbone` vertices.
ProblemInstance random_comb_convex_I(Rng& rng, int clique, int backbone, SpanLimit span = {});

// Structures on K: every I-vertex sees a random nonempty connected piece.

/// Tree-convex on K over a uniformly random recursive tree.
ProblemInstance random_tree_convex_K(Rng& rng, int clique, int independent, SpanLimit span = {});
/// Circular-convex on K.
ProblemInstance random_circular_convex_K(Rng& rng, int clique, int independent, SpanLimit span = {});

/// No structure; each K-I pair is an edge with probability `density`, and
/// each I-vertex gets at least one neighbor. Connected whenever clique >= 1.
SplitGraph random_split_graph(Rng& rng, int clique, int independent, double density);

/// Every I-vertex sees 1..max_degree clique vertices chosen uniformly.
SplitGraph random_bounded_degree_split(Rng& rng, int clique, int independent, int max_degree);

/// Random nonempty subset of V(G).
VertexSet random_terminals(Rng& rng, const SplitGraph& graph);

/// X3C over 3q elements with `sets` triples. With `planted`, the first q
/// triples drawn form a partition (shuffled in among the rest). Every
/// element appears in some triple.
X3CInstance random_x3c(Rng& rng, int q, int sets, bool planted);

/// G(n, p) with at least two edges; budget uniform in [0, n].
VCInstance random_vc(Rng& rng, int vertices, double density);

}  // namespace splitsteiner
