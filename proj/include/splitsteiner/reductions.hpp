#pragma once

#include <array>

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

// Exact cover by 3-sets ------------------------------------------------------

struct X3CInstance {
  int ground = 0;                          ///< |X| = 3q, elements 0..ground-1
  std::vector<std::array<int, 3>> sets;
};

/// Throws MalformedX3C: |X| not a positive multiple of 3, repeated or out of
/// range elements, or an element no set contains (its vertex would be
/// isolated).
void validate_x3c(const X3CInstance& x3c);

struct X3CReduction {
  ProblemInstance instance;  ///< star on I rooted at the extra vertex, R = I, budget q
  int q = 0;
  /// c_i is clique vertex i; element j is I-vertex sets.size() + j; the
  /// root is the last I-vertex.
  Vertex root = -1;
};

/// Clique c_i per set, I-vertex per element plus a root adjacent to every
/// c_i; c_i sees the elements of C_i.
X3CReduction reduce_x3c(const X3CInstance& x3c);

/// Indices of the sets whose vertices appear in S.
std::vector<int> x3c_sets_from_solution(const X3CReduction& reduction, const VertexSet& steiner_set);
bool is_exact_cover(const X3CInstance& x3c, const std::vector<int>& chosen);
/// Brute force over q-subsets of the collection.
bool x3c_has_exact_cover(const X3CInstance& x3c);

/// The six-element, five-set example: C1={1,2,3}, C2={2,3,4}, C3={1,2,5},
/// C4={2,5,6}, C5={1,5,6} (1-based); its unique exact cover is {C2, C5}.
X3CInstance x3c_example();

// Vertex cover ---------------------------------------------------------------

struct VCInstance {
  int vertices = 0;
  std::vector<Edge> edges;  ///< 0-based endpoints
  int budget = 0;
};

/// Throws MalformedVC: loops, repeated edges, bad endpoints, no edges.
void validate_vertex_cover(const VCInstance& vc);

struct VCReduction {
  ProblemInstance instance;  ///< comb on I, R = the y vertices, budget k
};

/// Clique x_i per vertex; per edge e an I-vertex y_e seeing its endpoints and
/// an I-vertex z_e seeing every x. Comb with backbone z, teeth y.
VCReduction reduce_vertex_cover(const VCInstance& vc);

/// Vertices of the source graph whose images are in S.
std::vector<int> vertex_cover_from_solution(const VCReduction& reduction, const VertexSet& steiner_set);
bool is_vertex_cover(const VCInstance& vc, const std::vector<int>& cover);
/// Size of a minimum vertex cover by brute force.
int min_vertex_cover(const VCInstance& vc);

// Split graph to chordal-convex ----------------------------------------------

struct ChordalReduction {
  ProblemInstance instance;  ///< chordal structure on K*, R = I*
  /// Target clique w_i = i and y_j = m + j; target I-vertex x_j = m + n + j.
  int source_clique = 0;
  int source_independent = 0;
};

/// K* = w-copies of K plus a y_j per I-vertex, I* = copies x_j. x_j sees its
/// original neighbors and y_j. The imaginary graph on K* is the source graph
/// itself (w clique, y_j joined to the w's that saw x_j).
ChordalReduction reduce_split_to_chordal_convex(const SplitGraph& graph);

/// Source Steiner set from a target one: w_i -> w_i, y_j -> any neighbor of x_j.
VertexSet chordal_solution_to_source(const ChordalReduction& reduction, const SplitGraph& source,
                                     const VertexSet& steiner_set);

}  // namespace splitsteiner
