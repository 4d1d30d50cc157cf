#include "splitsteiner/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Vertex> range_ids(int from, int count) {
  std::vector<Vertex> out(count);
  std::iota(out.begin(), out.end(), from);
  return out;
}

std::vector<Vertex> shuffled(Rng& rng, std::vector<Vertex> v) {
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

/// The imaginary structure with local indices 0..size-1.
struct Local {
  std::vector<Vertex> ids;
  std::vector<std::vector<int>> adj;
};

Local local_graph(const ConvexStructure& s) {
  Local out;
  out.ids = s.vertices();
  std::map<Vertex, int> at;
  for (std::size_t i = 0; i < out.ids.size(); ++i) at[out.ids[i]] = static_cast<int>(i);
  out.adj.resize(out.ids.size());
  for (auto [a, b] : s.imaginary_edges()) {
    out.adj[at[a]].push_back(at[b]);
    out.adj[at[b]].push_back(at[a]);
  }
  return out;
}

int pick_span(Rng& rng, SpanLimit span, int side) {
  const int cap = span.max_span > 0 ? span.max_span : std::max(2, side / 3);
  return uniform(rng, 1, std::min(cap, side));
}

/// Random connected piece of `size` vertices grown from a random start.
std::vector<char> connected_piece(Rng& rng, const Local& l, int size) {
  const int n = static_cast<int>(l.ids.size());
  std::vector<char> in(n, 0);
  std::vector<int> frontier{uniform(rng, 0, n - 1)};
  int taken = 0;
  while (taken < size && !frontier.empty()) {
    const int at = uniform(rng, 0, static_cast<int>(frontier.size()) - 1);
    const int v = frontier[at];
    frontier.erase(frontier.begin() + at);
    if (in[v]) continue;
    in[v] = 1;
    ++taken;
    for (int u : l.adj[v]) {
      if (!in[u]) frontier.push_back(u);
    }
  }
  return in;
}

/// Adds a shortest path from the piece to `target`; the piece stays connected.
void stretch(const Local& l, std::vector<char>& piece, int target) {
  const int n = static_cast<int>(l.ids.size());
  std::vector<int> parent(n, -2);
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    if (piece[v]) {
      parent[v] = -1;
      q.push(v);
    }
  }
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (v == target) break;
    for (int u : l.adj[v]) {
      if (parent[u] == -2) {
        parent[u] = v;
        q.push(u);
      }
    }
  }
  for (int v = target; v >= 0 && !piece[v]; v = parent[v]) piece[v] = 1;
}

ProblemInstance structured_on_I(Rng& rng, int m, ConvexStructure s, SpanLimit span) {
  const Local l = local_graph(s);
  const int n = static_cast<int>(l.ids.size());
  std::vector<std::vector<char>> pieces(m);
  std::vector<char> covered(n, 0);
  for (int u = 0; u < m; ++u) {
    pieces[u] = connected_piece(rng, l, pick_span(rng, span, n));
    for (int v = 0; v < n; ++v) covered[v] |= pieces[u][v];
  }
  for (int t : shuffled(rng, range_ids(0, n))) {
    if (covered[t]) continue;
    auto& piece = pieces[uniform(rng, 0, m - 1)];
    stretch(l, piece, t);
    for (int v = 0; v < n; ++v) covered[v] |= piece[v];
  }
  std::vector<VertexSet> nbhd(m);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < n; ++v) {
      if (pieces[u][v]) nbhd[u].push_back(l.ids[v]);
    }
  }
  return covering_instance(SplitGraph::from_neighborhoods(m, n, std::move(nbhd)), std::move(s));
}

ProblemInstance structured_on_K(Rng& rng, int n, ConvexStructure s, SpanLimit span) {
  const Local l = local_graph(s);
  const int m = static_cast<int>(l.ids.size());
  std::vector<std::vector<Vertex>> rows(m);
  for (int j = 0; j < n; ++j) {
    const auto piece = connected_piece(rng, l, pick_span(rng, span, m));
    for (int v = 0; v < m; ++v) {
      if (piece[v]) rows[l.ids[v]].push_back(m + j);
    }
  }
  std::vector<VertexSet> nbhd(m);
  for (int u = 0; u < m; ++u) nbhd[u] = make_vertex_set(std::move(rows[u]));
  return covering_instance(SplitGraph::from_neighborhoods(m, n, std::move(nbhd)), std::move(s));
}

void require_sizes(int clique, int independent) {
  require(clique >= 1, "need at least one clique vertex");
  require(independent >= 1, "need at least one independent vertex");
}

std::array<int, 3> random_triple(Rng& rng, int ground) {
  std::array<int, 3> t{};
  std::vector<int> pool = range_ids(0, ground);
  for (int i = 0; i < 3; ++i) {
    const int at = uniform(rng, i, ground - 1);
    std::swap(pool[i], pool[at]);
    t[i] = pool[i];
  }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

ProblemInstance random_path_convex_I(Rng& rng, int clique, int independent, SpanLimit span) {
  require_sizes(clique, independent);
  const auto order = shuffled(rng, range_ids(clique, independent));
  return structured_on_I(rng, clique, ConvexStructure::path(Side::Independent, order), span);
}

ProblemInstance random_circular_convex_I(Rng& rng, int clique, int independent, SpanLimit span) {
  require_sizes(clique, independent);
  require(independent >= 3, "a circle needs at least three vertices");
  const auto order = shuffled(rng, range_ids(clique, independent));
  return structured_on_I(rng, clique, ConvexStructure::cycle(Side::Independent, order), span);
}

ProblemInstance random_triad_convex_I(Rng& rng, int clique, int leg_length, SpanLimit span) {
  require(leg_length >= 2, "triad legs need at least two vertices");
  require_sizes(clique, 1);
  const int n = 1 + 3 * leg_length;
  const auto ids = shuffled(rng, range_ids(clique, n));
  std::array<std::vector<Vertex>, 3> legs;
  for (int i = 0; i < 3; ++i) {
    legs[i].assign(ids.begin() + 1 + i * leg_length, ids.begin() + 1 + (i + 1) * leg_length);
  }
  return structured_on_I(rng, clique, ConvexStructure::triad(Side::Independent, ids[0], legs), span);
}

ProblemInstance random_star_convex_I(Rng& rng, int clique, int leaves,
                                     std::optional<int> degree_bound) {
  require_sizes(clique, leaves);
  const auto ids = shuffled(rng, range_ids(clique, leaves + 1));
  const Vertex root = ids[0];
  std::vector<Vertex> leaf_ids(ids.begin() + 1, ids.end());
  auto star = ConvexStructure::star(Side::Independent, root, leaf_ids);
  if (!degree_bound) return structured_on_I(rng, clique, std::move(star), {});

  const int d = *degree_bound;
  require(d >= 1, "degree bound must be positive");
  const int n = leaves + 1;
  std::vector<int> degree(n, 0);  // indexed by id - clique
  std::vector<std::vector<Vertex>> rows(clique);
  for (int u = 0; u < clique; ++u) {
    // u = 0 always holds the root so stray leaves have somewhere to go
    const bool holds_root = u == 0 || (degree[root - clique] < d && coin(rng, 0.5));
    if (holds_root) {
      rows[u].push_back(root);
      ++degree[root - clique];
    }
    const int want = holds_root ? uniform(rng, 0, std::max(1, leaves / 2)) : 1;
    for (Vertex y : shuffled(rng, leaf_ids)) {
      if (static_cast<int>(rows[u].size()) >= want + (holds_root ? 1 : 0)) break;
      if (degree[y - clique] >= d) continue;
      rows[u].push_back(y);
      ++degree[y - clique];
    }
  }
  std::vector<Vertex> holders;
  for (int u = 0; u < clique; ++u) {
    if (!rows[u].empty() && rows[u].front() == root) holders.push_back(u);
  }
  for (Vertex y : leaf_ids) {
    if (degree[y - clique] > 0) continue;
    rows[holders[uniform(rng, 0, static_cast<int>(holders.size()) - 1)]].push_back(y);
    ++degree[y - clique];
  }
  std::vector<VertexSet> nbhd(clique);
  for (int u = 0; u < clique; ++u) nbhd[u] = make_vertex_set(std::move(rows[u]));
  return covering_instance(SplitGraph::from_neighborhoods(clique, n, std::move(nbhd)), std::move(star));
}

ProblemInstance random_comb_convex_I(Rng& rng, int clique, int backbone, SpanLimit span) {
  require_sizes(clique, backbone);
  const auto ids = shuffled(rng, range_ids(clique, 2 * backbone));
  std::vector<Vertex> spine(ids.begin(), ids.begin() + backbone);
  std::vector<Vertex> teeth(ids.begin() + backbone, ids.end());
  return structured_on_I(rng, clique, ConvexStructure::comb(Side::Independent, spine, teeth), span);
}

ProblemInstance random_tree_convex_K(Rng& rng, int clique, int independent, SpanLimit span) {
  require_sizes(clique, independent);
  const auto ids = shuffled(rng, range_ids(0, clique));
  std::vector<Edge> edges;
  for (int i = 1; i < clique; ++i) edges.emplace_back(ids[uniform(rng, 0, i - 1)], ids[i]);
  return structured_on_K(rng, independent, ConvexStructure::tree(Side::Clique, ids[0], edges), span);
}

ProblemInstance random_circular_convex_K(Rng& rng, int clique, int independent, SpanLimit span) {
  require_sizes(clique, independent);
  require(clique >= 3, "a circle needs at least three vertices");
  const auto order = shuffled(rng, range_ids(0, clique));
  return structured_on_K(rng, independent, ConvexStructure::cycle(Side::Clique, order), span);
}

SplitGraph random_split_graph(Rng& rng, int clique, int independent, double density) {
  require(clique >= 1, "need at least one clique vertex");
  require(independent >= 0, "negative independent size");
  require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  std::vector<std::vector<Vertex>> rows(clique);
  for (int j = 0; j < independent; ++j) {
    bool any = false;
    for (int u = 0; u < clique; ++u) {
      if (coin(rng, density)) {
        rows[u].push_back(clique + j);
        any = true;
      }
    }
    if (!any) rows[uniform(rng, 0, clique - 1)].push_back(clique + j);
  }
  std::vector<VertexSet> nbhd(clique);
  for (int u = 0; u < clique; ++u) nbhd[u] = make_vertex_set(std::move(rows[u]));
  return SplitGraph::from_neighborhoods(clique, independent, std::move(nbhd));
}

SplitGraph random_bounded_degree_split(Rng& rng, int clique, int independent, int max_degree) {
  require(clique >= 1, "need at least one clique vertex");
  require(max_degree >= 1, "degree bound must be positive");
  std::vector<std::vector<Vertex>> rows(clique);
  for (int j = 0; j < independent; ++j) {
    const auto pick = shuffled(rng, range_ids(0, clique));
    const int d = uniform(rng, 1, std::min(max_degree, clique));
    for (int i = 0; i < d; ++i) rows[pick[i]].push_back(clique + j);
  }
  std::vector<VertexSet> nbhd(clique);
  for (int u = 0; u < clique; ++u) nbhd[u] = make_vertex_set(std::move(rows[u]));
  return SplitGraph::from_neighborhoods(clique, independent, std::move(nbhd));
}

VertexSet random_terminals(Rng& rng, const SplitGraph& graph) {
  require(graph.order() >= 1, "graph is empty");
  const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (coin(rng, p)) out.push_back(v);
  }
  if (out.empty()) out.push_back(uniform(rng, 0, graph.order() - 1));
  return out;
}

X3CInstance random_x3c(Rng& rng, int q, int sets, bool planted) {
  require(q >= 1, "q must be positive");
  X3CInstance out;
  out.ground = 3 * q;
  if (planted) {
    const auto perm = shuffled(rng, range_ids(0, out.ground));
    for (int i = 0; i < q; ++i) {
      std::array<int, 3> t{perm[3 * i], perm[3 * i + 1], perm[3 * i + 2]};
      std::sort(t.begin(), t.end());
      out.sets.push_back(t);
    }
  }
  while (static_cast<int>(out.sets.size()) < sets) out.sets.push_back(random_triple(rng, out.ground));
  std::vector<char> seen(out.ground, 0);
  for (const auto& t : out.sets) {
    for (int e : t) seen[e] = 1;
  }
  for (int e = 0; e < out.ground; ++e) {
    if (seen[e]) continue;
    auto t = random_triple(rng, out.ground);
    if (std::find(t.begin(), t.end(), e) == t.end()) t[uniform(rng, 0, 2)] = e;
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      --e;  // e collided with a drawn element; draw again
      continue;
    }
    for (int x : t) seen[x] = 1;
    out.sets.push_back(t);
  }
  std::shuffle(out.sets.begin(), out.sets.end(), rng);
  return out;
}

VCInstance random_vc(Rng& rng, int vertices, double density) {
  require(vertices >= 3, "need at least three vertices for two distinct edges");
  require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  VCInstance out;
  out.vertices = vertices;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (coin(rng, density)) out.edges.emplace_back(u, v);
    }
  }
  while (out.edges.size() < 2) {
    int u = uniform(rng, 0, vertices - 1), v = uniform(rng, 0, vertices - 1);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (std::find(out.edges.begin(), out.edges.end(), Edge{u, v}) == out.edges.end()) {
      out.edges.emplace_back(u, v);
    }
  }
  out.budget = uniform(rng, 0, vertices);
  return out;
}

}  // namespace splitsteiner
