#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitsteiner/convexity.hpp"
#include "splitsteiner/split_graph.hpp"

namespace splitsteiner {

struct ProblemInstance {
  SplitGraph graph;
  std::optional<ConvexStructure> structure;
  VertexSet terminals;
  std::optional<int> budget;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Checks R ⊆ V(G) and 0 <= budget <= |V(G)|; throws InvalidParameter.
void validate_instance(const ProblemInstance& instance);

/// Instance with R = I and no budget.
ProblemInstance covering_instance(SplitGraph graph, std::optional<ConvexStructure> structure = {});

/// Counters a solver fills in while it runs. Fields a solver has no use for
/// stay zero.
struct SolveStats {
  long path_solver_calls = 0;
  long cases = 0;
  long skipped_cases = 0;
  int anchors = 0;  ///< anchors used by the winning case
  long search_nodes = 0;
  long search_leaves = 0;
  std::vector<std::string> notes;
};

struct SteinerSolution {
  VertexSet steiner_set;
  std::string method;
  SolveStats stats;
  std::vector<std::string> warnings;

  int size() const noexcept { return static_cast<int>(steiner_set.size()); }
};

/// Spanning tree of G[S ∪ R] as a connectivity certificate; empty when
/// S ∪ R has at most one vertex or is disconnected.
std::vector<Edge> connectivity_witness(const SplitGraph& graph, const VertexSet& terminals,
                                       const VertexSet& steiner_set);

/// An instance rewritten so that R = I, plus what is needed to read a
/// solution of it as a Steiner set of the original.
struct NormalizedInstance {
  ProblemInstance instance;
  std::vector<Vertex> origin;  ///< normalized id -> original id
  VertexSet mandated;          ///< W = R ∩ K, already part of the tree
  bool trivial = false;        ///< answer is ∅ without solving anything
  bool structure_dropped = false;
};

/// Reduces arbitrary terminals to the R = I case.
///  R ⊆ K or |R| = 1   -> trivial, S = ∅.
///  R ⊆ I              -> subgraph on K ∪ R.
///  mixed              -> K' = K \ W, I' = (I ∩ R) \ N^I(W), W = R ∩ K.
/// The declared structure is carried over when its shape survives the
/// deletions; otherwise it is dropped and structure_dropped is set.
/// Throws EmptyTerminals.
NormalizedInstance normalize_terminals(const ProblemInstance& instance);

/// Maps a covering set of the normalized instance back to original ids.
/// W is not part of the result: its members are terminals, so they already
/// belong to the tree and are excluded from the Steiner set.
VertexSet lift_normalized(const NormalizedInstance& normalized, const VertexSet& solution);

/// True iff every I-vertex has a neighbor in S (S ⊆ K).
bool covers_independent(const SplitGraph& graph, const VertexSet& clique_subset);

}  // namespace splitsteiner
