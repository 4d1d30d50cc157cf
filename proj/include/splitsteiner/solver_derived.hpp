#pragma once

#include <functional>

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

/// Ids of the auxiliary vertices some constructions add; they show up in
/// DerivedInstance::origin in place of an original vertex.
inline constexpr Vertex kAuxAlpha1 = -1;
inline constexpr Vertex kAuxAlpha2 = -2;
inline constexpr Vertex kAuxBeta1 = -3;
inline constexpr Vertex kAuxBeta2 = -4;

/// A path-convex (or path-on-K) instance carved out of the input, with the
/// map back to the input's ids. Negative origins are auxiliary vertices.
struct DerivedInstance {
  ProblemInstance instance;
  std::vector<Vertex> origin;
};

/// One anchored case: the anchors themselves, the derived instances whose
/// solutions complete them, and the vertices the case always contributes.
struct CaseSubinstances {
  VertexSet anchors;
  std::vector<DerivedInstance> parts;
  VertexSet fixed;
  bool feasible = true;
  std::string skip_reason;
};

/// fixed ∪ (part solutions mapped back, auxiliaries dropped).
VertexSet assemble(const CaseSubinstances& c, const std::vector<VertexSet>& part_solutions);

// Triad-convex on I ---------------------------------------------------------

/// Case where S ∩ N(z) is exactly `anchors` (1 to 3 vertices of N(z)): one
/// path instance per leg holding the leg vertices the anchors miss and the
/// clique vertices outside N(z) that touch them.
CaseSubinstances triad_case(const ProblemInstance& instance, const VertexSet& anchors);

/// Enumerates every anchor set of size 1..3 and keeps the smallest assembly.
/// Throws StructureMismatch, TerminalsNotIndependentSet.
SteinerSolution solve_triad_convex_I(const ProblemInstance& instance);

// Circular-convex on I ------------------------------------------------------

/// The I-vertex the circular-I solver branches on: minimum degree, then
/// smallest id.
Vertex circular_pivot(const SplitGraph& graph);

/// Exactly one anchor u ∈ N(x_i). The clique loses N(x_i) and gains α1, α2
/// carrying the two halves of u's arc; pendant β1, β2 force both of them.
CaseSubinstances circular_I_single(const ProblemInstance& instance, Vertex pivot, Vertex anchor);

/// Exactly two anchors u, v ∈ N(x_i). They stay in the clique, but u now
/// sees the left half of the union of their arcs plus β1 and v the right
/// half plus β2.
CaseSubinstances circular_I_pair(const ProblemInstance& instance, Vertex pivot, Vertex first,
                                 Vertex second);

/// Throws StructureMismatch, TerminalsNotIndependentSet.
SteinerSolution solve_circular_convex_I(const ProblemInstance& instance);

// Circular-convex on K ------------------------------------------------------

/// Exactly one anchor u ∈ N(z): drop N(z) from K and N^I(u) from I. The rest
/// of the clique circle is a path.
CaseSubinstances circular_K_single(const ProblemInstance& instance, Vertex pivot, Vertex anchor);

/// Anchors u, v ∈ N(z): drop the arc of N(z) between them and both of their
/// I-neighborhoods.
CaseSubinstances circular_K_pair(const ProblemInstance& instance, Vertex pivot, Vertex first,
                                 Vertex second);

/// Throws StructureMismatch, TerminalsNotIndependentSet.
SteinerSolution solve_circular_convex_K(const ProblemInstance& instance);

}  // namespace splitsteiner
