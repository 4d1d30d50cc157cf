#include "splitsteiner/convexity.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {"path", "cycle", "star",   "comb",
                                                        "triad", "tree", "chordal"};

void require_distinct(const std::vector<Vertex>& vertices, std::string_view what) {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidLayout(std::string(what) + " lists a vertex twice");
  }
}

Edge ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

using Adjacency = std::map<Vertex, std::vector<Vertex>>;

Adjacency adjacency_of(const VertexSet& vertices, const std::vector<Edge>& edges) {
  Adjacency adj;
  for (Vertex v : vertices) adj[v];
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

/// Is `subset` connected in the imaginary graph? Empty sets count as connected.
bool induces_connected(const Adjacency& adj, const VertexSet& subset) {
  if (subset.size() <= 1) return true;
  std::set<Vertex> seen{subset.front()};
  std::queue<Vertex> frontier;
  frontier.push(subset.front());
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : adj.at(v)) {
      if (contains(subset, u) && seen.insert(u).second) frontier.push(u);
    }
  }
  return seen.size() == subset.size();
}

}  // namespace

std::string_view to_string(StructureKind kind) { return kKindNames[static_cast<int>(kind)]; }

std::optional<StructureKind> parse_structure_kind(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<StructureKind>(i);
  }
  return std::nullopt;
}

std::string_view to_string(Side side) { return side == Side::Clique ? "K" : "I"; }

ConvexStructure ConvexStructure::path(Side side, std::vector<Vertex> order) {
  require_distinct(order, "path order");
  return {side, PathLayout{std::move(order)}};
}

ConvexStructure ConvexStructure::cycle(Side side, std::vector<Vertex> order) {
  require_distinct(order, "cycle order");
  return {side, CycleLayout{std::move(order)}};
}

ConvexStructure ConvexStructure::star(Side side, Vertex root, std::vector<Vertex> leaves) {
  std::vector<Vertex> all = leaves;
  all.push_back(root);
  require_distinct(all, "star");
  return {side, StarLayout{root, std::move(leaves)}};
}

ConvexStructure ConvexStructure::comb(Side side, std::vector<Vertex> backbone,
                                      std::vector<Vertex> teeth) {
  if (backbone.empty()) throw InvalidLayout("comb needs a nonempty backbone");
  if (backbone.size() != teeth.size()) {
    throw InvalidLayout("comb needs exactly one tooth per backbone vertex");
  }
  std::vector<Vertex> all = backbone;
  all.insert(all.end(), teeth.begin(), teeth.end());
  require_distinct(all, "comb");
  return {side, CombLayout{std::move(backbone), std::move(teeth)}};
}

ConvexStructure ConvexStructure::triad(Side side, Vertex root,
                                       std::array<std::vector<Vertex>, 3> legs) {
  std::vector<Vertex> all{root};
  for (const auto& leg : legs) {
    if (leg.size() < 2) throw InvalidLayout("triad legs need at least two vertices");
    all.insert(all.end(), leg.begin(), leg.end());
  }
  require_distinct(all, "triad");
  return {side, TriadLayout{root, std::move(legs)}};
}

ConvexStructure ConvexStructure::tree(Side side, Vertex root, std::vector<Edge> parent_child) {
  std::set<Vertex> vertices{root};
  std::map<Vertex, int> parents;
  for (auto [p, c] : parent_child) {
    if (c == root) throw InvalidLayout("tree root has a parent");
    if (++parents[c] > 1) throw InvalidLayout("tree vertex has two parents");
    vertices.insert(p);
    vertices.insert(c);
  }
  if (parent_child.size() + 1 != vertices.size()) {
    throw InvalidLayout("tree edge count does not match its vertex count");
  }
  const VertexSet vs(vertices.begin(), vertices.end());
  const Adjacency adj = adjacency_of(vs, parent_child);
  if (!induces_connected(adj, vs)) throw InvalidLayout("tree is not connected");
  return {side, TreeLayout{root, std::move(parent_child)}};
}

ConvexStructure ConvexStructure::chordal(Side side, std::vector<Vertex> vertices,
                                         std::vector<Edge> edges) {
  require_distinct(vertices, "chordal vertex list");
  const VertexSet vs = make_vertex_set(vertices);
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a == b) throw InvalidLayout("chordal layout has a loop");
    if (!contains(vs, a) || !contains(vs, b)) {
      throw InvalidLayout("chordal edge uses a vertex outside the layout");
    }
    seen.insert(ordered(a, b));
  }
  std::vector<Edge> unique_edges(seen.begin(), seen.end());
  if (!is_chordal(vs, unique_edges)) throw InvalidLayout("imaginary graph is not chordal");
  return {side, ChordalLayout{vs, std::move(unique_edges)}};
}

VertexSet ConvexStructure::vertices() const {
  return std::visit(
      [](const auto& l) -> VertexSet {
        using L = std::decay_t<decltype(l)>;
        std::vector<Vertex> out;
        if constexpr (std::is_same_v<L, PathLayout> || std::is_same_v<L, CycleLayout>) {
          out = l.order;
        } else if constexpr (std::is_same_v<L, StarLayout>) {
          out = l.leaves;
          out.push_back(l.root);
        } else if constexpr (std::is_same_v<L, CombLayout>) {
          out = l.backbone;
          out.insert(out.end(), l.teeth.begin(), l.teeth.end());
        } else if constexpr (std::is_same_v<L, TriadLayout>) {
          out.push_back(l.root);
          for (const auto& leg : l.legs) out.insert(out.end(), leg.begin(), leg.end());
        } else if constexpr (std::is_same_v<L, TreeLayout>) {
          out.push_back(l.root);
          for (auto [p, c] : l.edges) out.push_back(c);
        } else {
          out = l.vertices;
        }
        return make_vertex_set(std::move(out));
      },
      layout_);
}

std::vector<Edge> ConvexStructure::imaginary_edges() const {
  std::set<Edge> out;
  std::visit(
      [&out](const auto& l) {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, PathLayout>) {
          for (std::size_t i = 0; i + 1 < l.order.size(); ++i) {
            out.insert(ordered(l.order[i], l.order[i + 1]));
          }
        } else if constexpr (std::is_same_v<L, CycleLayout>) {
          const std::size_t s = l.order.size();
          for (std::size_t i = 0; s > 1 && i < s; ++i) {
            out.insert(ordered(l.order[i], l.order[(i + 1) % s]));
          }
        } else if constexpr (std::is_same_v<L, StarLayout>) {
          for (Vertex leaf : l.leaves) out.insert(ordered(l.root, leaf));
        } else if constexpr (std::is_same_v<L, CombLayout>) {
          for (std::size_t i = 0; i < l.backbone.size(); ++i) {
            out.insert(ordered(l.backbone[i], l.teeth[i]));
            if (i + 1 < l.backbone.size()) out.insert(ordered(l.backbone[i], l.backbone[i + 1]));
          }
        } else if constexpr (std::is_same_v<L, TriadLayout>) {
          for (const auto& leg : l.legs) {
            out.insert(ordered(l.root, leg.front()));
            for (std::size_t i = 0; i + 1 < leg.size(); ++i) out.insert(ordered(leg[i], leg[i + 1]));
          }
        } else {
          for (auto [a, b] : l.edges) out.insert(ordered(a, b));
        }
      },
      layout_);
  return {out.begin(), out.end()};
}

std::optional<Vertex> ConvexStructure::root() const {
  switch (kind()) {
    case StructureKind::Path: {
      const auto& order = std::get<PathLayout>(layout_).order;
      if (order.empty()) return std::nullopt;
      return order.front();
    }
    case StructureKind::Star:
      return std::get<StarLayout>(layout_).root;
    case StructureKind::Comb:
      return std::get<CombLayout>(layout_).backbone.front();
    case StructureKind::Triad:
      return std::get<TriadLayout>(layout_).root;
    case StructureKind::Tree:
      return std::get<TreeLayout>(layout_).root;
    default:
      return std::nullopt;
  }
}

bool ConvexStructure::is_tree_shaped() const noexcept {
  const auto k = kind();
  return k != StructureKind::Cycle && k != StructureKind::Chordal;
}

bool operator==(const ConvexStructure& a, const ConvexStructure& b) {
  return a.side_ == b.side_ && a.kind() == b.kind() && a.vertices() == b.vertices() &&
         a.imaginary_edges() == b.imaginary_edges() && a.root() == b.root();
}

VerificationReport verify_convexity(const SplitGraph& graph, const ConvexStructure& structure) {
  const VertexSet side = graph.side(structure.side());
  if (structure.vertices() != side) {
    throw LayoutMismatch(std::string("layout does not cover exactly the ") +
                         (structure.side() == Side::Clique ? "clique" : "independent set"));
  }
  const Adjacency adj = adjacency_of(side, structure.imaginary_edges());
  const Side opposite = structure.side() == Side::Clique ? Side::Independent : Side::Clique;

  VerificationReport report;
  for (Vertex v : graph.side(opposite)) {
    const VertexSet& nbhd = opposite == Side::Clique ? graph.independent_neighbors(v)
                                                     : graph.clique_neighbors(v);
    if (!induces_connected(adj, nbhd)) {
      report.violations.push_back(
          {v, "neighborhood of " + graph.label(v) + " is not connected in the " +
                  std::string(to_string(structure.kind()))});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::pair<Vertex, Vertex> interval_endpoints(const SplitGraph& graph,
                                             const ConvexStructure& path, Vertex u) {
  const auto* layout = path.get_if<PathLayout>();
  if (layout == nullptr) throw StructureMismatch("interval endpoints need a path structure");
  const bool on_independent = path.side() == Side::Independent;
  const VertexSet& nbhd =
      on_independent ? graph.independent_neighbors(u) : graph.clique_neighbors(u);
  if (nbhd.empty()) throw EmptyNeighborhood(graph.label(u) + " has no neighbor on the path");
  std::optional<Vertex> first;
  Vertex last = -1;
  for (Vertex v : layout->order) {
    if (contains(nbhd, v)) {
      if (!first) first = v;
      last = v;
    }
  }
  return {*first, last};
}

bool is_chordal(const VertexSet& vertices, const std::vector<Edge>& edges) {
  const Adjacency adj = adjacency_of(vertices, edges);
  // Maximum cardinality search; the reverse visiting order is a perfect
  // elimination ordering iff the graph is chordal.
  std::map<Vertex, int> weight;
  std::map<Vertex, int> position;
  for (Vertex v : vertices) weight[v] = 0;
  std::vector<Vertex> visit;
  for (std::size_t step = 0; step < vertices.size(); ++step) {
    Vertex best = -1;
    for (Vertex v : vertices) {
      if (position.contains(v)) continue;
      if (best < 0 || weight[v] > weight[best]) best = v;
    }
    position[best] = static_cast<int>(visit.size());
    visit.push_back(best);
    for (Vertex u : adj.at(best)) {
      if (!position.contains(u)) ++weight[u];
    }
  }
  // Eliminating in reverse visit order: the earlier-visited neighbors of each
  // vertex must form a clique. Checked via the latest such neighbor.
  std::set<Edge> edge_set;
  for (auto [a, b] : edges) edge_set.insert(ordered(a, b));
  for (Vertex v : visit) {
    std::vector<Vertex> earlier;
    for (Vertex u : adj.at(v)) {
      if (position[u] < position[v]) earlier.push_back(u);
    }
    if (earlier.size() < 2) continue;
    const Vertex parent = *std::max_element(earlier.begin(), earlier.end(),
                                            [&](Vertex a, Vertex b) { return position[a] < position[b]; });
    for (Vertex u : earlier) {
      if (u != parent && !edge_set.contains(ordered(u, parent))) return false;
    }
  }
  return true;
}

std::optional<ConvexStructure> remap_structure(const ConvexStructure& structure,
                                               const std::vector<Vertex>& to_new) {
  const auto map = [&](Vertex v) { return to_new.at(v); };
  const VertexSet old_vertices = structure.vertices();
  const bool all_kept = std::all_of(old_vertices.begin(), old_vertices.end(),
                                    [&](Vertex v) { return map(v) >= 0; });
  const auto remap_list = [&](const std::vector<Vertex>& list) {
    std::vector<Vertex> out;
    for (Vertex v : list) {
      if (map(v) >= 0) out.push_back(map(v));
    }
    return out;
  };
  const Side side = structure.side();
  switch (structure.kind()) {
    case StructureKind::Path:
      return ConvexStructure::path(side, remap_list(structure.get_if<PathLayout>()->order));
    case StructureKind::Cycle:
      return ConvexStructure::cycle(side, remap_list(structure.get_if<CycleLayout>()->order));
    case StructureKind::Star: {
      const auto* l = structure.get_if<StarLayout>();
      if (map(l->root) < 0) return std::nullopt;
      return ConvexStructure::star(side, map(l->root), remap_list(l->leaves));
    }
    case StructureKind::Triad: {
      // Deleting leg vertices keeps every subtree through the root connected.
      const auto* l = structure.get_if<TriadLayout>();
      if (map(l->root) < 0) return std::nullopt;
      std::array<std::vector<Vertex>, 3> legs{remap_list(l->legs[0]), remap_list(l->legs[1]),
                                              remap_list(l->legs[2])};
      for (const auto& leg : legs) {
        if (leg.size() < 2) return std::nullopt;
      }
      return ConvexStructure::triad(side, map(l->root), std::move(legs));
    }
    default:
      break;
  }
  if (!all_kept) return std::nullopt;
  switch (structure.kind()) {
    case StructureKind::Comb: {
      const auto* l = structure.get_if<CombLayout>();
      return ConvexStructure::comb(side, remap_list(l->backbone), remap_list(l->teeth));
    }
    case StructureKind::Tree: {
      const auto* l = structure.get_if<TreeLayout>();
      std::vector<Edge> edges;
      for (auto [p, c] : l->edges) edges.emplace_back(map(p), map(c));
      return ConvexStructure::tree(side, map(l->root), std::move(edges));
    }
    case StructureKind::Chordal: {
      const auto* l = structure.get_if<ChordalLayout>();
      std::vector<Edge> edges;
      for (auto [a, b] : l->edges) edges.emplace_back(map(a), map(b));
      return ConvexStructure::chordal(side, remap_list(l->vertices), std::move(edges));
    }
    default:
      return std::nullopt;
  }
}

}  // namespace splitsteiner
