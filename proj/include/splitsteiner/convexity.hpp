#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "splitsteiner/split_graph.hpp"

namespace splitsteiner {

enum class StructureKind { Path, Cycle, Star, Comb, Triad, Tree, Chordal };

std::string_view to_string(StructureKind kind);
std::optional<StructureKind> parse_structure_kind(std::string_view text);
std::string_view to_string(Side side);

struct PathLayout {
  std::vector<Vertex> order;
};
struct CycleLayout {
  std::vector<Vertex> order;
};
struct StarLayout {
  Vertex root = -1;
  std::vector<Vertex> leaves;
};
struct CombLayout {
  std::vector<Vertex> backbone;
  std::vector<Vertex> teeth;  ///< teeth[i] hangs off backbone[i]
};
struct TriadLayout {
  Vertex root = -1;
  std::array<std::vector<Vertex>, 3> legs;  ///< each leg listed from the root outward
};
struct TreeLayout {
  Vertex root = -1;
  std::vector<Edge> edges;  ///< (parent, child)
};
struct ChordalLayout {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Imaginary structure certifying convexity on one side of a split graph.
/// Factories check the layout's own shape and throw InvalidLayout; whether it
/// fits a particular graph is verify_convexity's job.
class ConvexStructure {
 public:
  using Layout = std::variant<PathLayout, CycleLayout, StarLayout, CombLayout, TriadLayout,
                              TreeLayout, ChordalLayout>;

  static ConvexStructure path(Side side, std::vector<Vertex> order);
  static ConvexStructure cycle(Side side, std::vector<Vertex> order);
  static ConvexStructure star(Side side, Vertex root, std::vector<Vertex> leaves);
  static ConvexStructure comb(Side side, std::vector<Vertex> backbone, std::vector<Vertex> teeth);
  static ConvexStructure triad(Side side, Vertex root, std::array<std::vector<Vertex>, 3> legs);
  static ConvexStructure tree(Side side, Vertex root, std::vector<Edge> parent_child);
  static ConvexStructure chordal(Side side, std::vector<Vertex> vertices, std::vector<Edge> edges);

  StructureKind kind() const noexcept { return static_cast<StructureKind>(layout_.index()); }
  Side side() const noexcept { return side_; }
  const Layout& layout() const noexcept { return layout_; }
  template <class L>
  const L* get_if() const noexcept {
    return std::get_if<L>(&layout_);
  }

  /// Sorted vertex set covered by the layout.
  VertexSet vertices() const;
  /// Edges of the imaginary graph (deduplicated, smaller id first).
  std::vector<Edge> imaginary_edges() const;
  /// Root for the tree-shaped kinds: star/triad/tree root, first backbone
  /// vertex of a comb, first vertex of a path. Empty for cycle and chordal.
  std::optional<Vertex> root() const;
  bool is_tree_shaped() const noexcept;

  friend bool operator==(const ConvexStructure& a, const ConvexStructure& b);

 private:
  ConvexStructure(Side side, Layout layout) : side_(side), layout_(std::move(layout)) {}
  Side side_ = Side::Independent;
  Layout layout_;
};

struct Violation {
  Vertex vertex;
  std::string reason;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks that the neighborhood of every vertex on the opposite side induces a
/// connected subgraph of the imaginary structure. Empty neighborhoods pass.
/// Throws LayoutMismatch if the layout does not cover exactly the declared side.
VerificationReport verify_convexity(const SplitGraph& graph, const ConvexStructure& structure);

/// Least and greatest neighbors of u under a path ordering of the opposite side.
/// Throws EmptyNeighborhood, StructureMismatch for non-path structures.
std::pair<Vertex, Vertex> interval_endpoints(const SplitGraph& graph,
                                             const ConvexStructure& path, Vertex u);

/// Chordality by maximum cardinality search plus a perfect elimination check.
bool is_chordal(const VertexSet& vertices, const std::vector<Edge>& edges);

/// Re-expresses a structure after vertices were renumbered or dropped.
/// `to_new[v]` is the new id of v or -1. Paths and cycles survive deletions,
/// stars and triads survive as long as the root does (triad legs keep two
/// vertices each), other kinds only survive when no
/// vertex was dropped. Returns nullopt when the shape cannot be kept.
std::optional<ConvexStructure> remap_structure(const ConvexStructure& structure,
                                               const std::vector<Vertex>& to_new);

}  // namespace splitsteiner
