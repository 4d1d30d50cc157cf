#include "splitsteiner/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

void validate_x3c(const X3CInstance& x3c) {
  if (x3c.ground <= 0 || x3c.ground % 3 != 0) {
    throw MalformedX3C("ground set size must be a positive multiple of 3");
  }
  std::vector<bool> seen(x3c.ground, false);
  for (std::size_t i = 0; i < x3c.sets.size(); ++i) {
    auto s = x3c.sets[i];
    for (int e : s) {
      if (e < 0 || e >= x3c.ground) {
        throw MalformedX3C("set " + std::to_string(i + 1) + " has an element outside X");
      }
      seen[e] = true;
    }
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2]) {
      throw MalformedX3C("set " + std::to_string(i + 1) + " repeats an element");
    }
  }
  for (int e = 0; e < x3c.ground; ++e) {
    if (!seen[e]) throw MalformedX3C("element " + std::to_string(e + 1) + " is in no set");
  }
}

X3CReduction reduce_x3c(const X3CInstance& x3c) {
  validate_x3c(x3c);
  const int m = static_cast<int>(x3c.sets.size());
  const int n = x3c.ground + 1;
  const Vertex root = m + x3c.ground;
  std::vector<VertexSet> nbhd(m);
  for (int i = 0; i < m; ++i) {
    std::vector<Vertex> row{root};
    for (int e : x3c.sets[i]) row.push_back(m + e);
    nbhd[i] = make_vertex_set(std::move(row));
  }
  SplitGraph g = SplitGraph::from_neighborhoods(m, n, std::move(nbhd));

  std::vector<Vertex> leaves;
  for (int e = 0; e < x3c.ground; ++e) leaves.push_back(m + e);
  X3CReduction out;
  out.q = x3c.ground / 3;
  out.root = root;
  out.instance = covering_instance(std::move(g), ConvexStructure::star(Side::Independent, root, leaves));
  out.instance.terminals = out.instance.graph.independent();
  out.instance.budget = out.q;
  return out;
}

std::vector<int> x3c_sets_from_solution(const X3CReduction& reduction, const VertexSet& steiner_set) {
  std::vector<int> out;
  for (Vertex v : steiner_set) {
    if (!reduction.instance.graph.in_clique(v)) {
      throw CorruptCertificate("Steiner vertex " + std::to_string(v) + " is not a set vertex");
    }
    out.push_back(v);
  }
  return out;
}

bool is_exact_cover(const X3CInstance& x3c, const std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) * 3 != x3c.ground) return false;
  std::vector<int> hits(x3c.ground, 0);
  for (int i : chosen) {
    if (i < 0 || i >= static_cast<int>(x3c.sets.size())) return false;
    for (int e : x3c.sets[i]) ++hits[e];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace {

bool exact_cover_from(const X3CInstance& x3c, std::vector<bool>& used, int covered) {
  if (covered == x3c.ground) return true;
  int first = 0;
  while (used[first]) ++first;
  // the smallest uncovered element must be hit by exactly one chosen set
  for (const auto& s : x3c.sets) {
    if (std::find(s.begin(), s.end(), first) == s.end()) continue;
    if (used[s[0]] || used[s[1]] || used[s[2]]) continue;
    for (int e : s) used[e] = true;
    if (exact_cover_from(x3c, used, covered + 3)) return true;
    for (int e : s) used[e] = false;
  }
  return false;
}

}  // namespace

bool x3c_has_exact_cover(const X3CInstance& x3c) {
  validate_x3c(x3c);
  std::vector<bool> used(x3c.ground, false);
  return exact_cover_from(x3c, used, 0);
}

X3CInstance x3c_example() {
  X3CInstance x;
  x.ground = 6;
  x.sets = {{0, 1, 2}, {1, 2, 3}, {0, 1, 4}, {1, 4, 5}, {0, 4, 5}};
  return x;
}

void validate_vertex_cover(const VCInstance& vc) {
  if (vc.vertices <= 0) throw MalformedVC("graph has no vertices");
  if (vc.edges.empty()) throw MalformedVC("graph has no edges");
  if (vc.budget < 0) throw MalformedVC("negative budget");
  std::set<Edge> seen;
  for (auto [u, v] : vc.edges) {
    if (u < 0 || v < 0 || u >= vc.vertices || v >= vc.vertices) {
      throw MalformedVC("edge endpoint out of range");
    }
    if (u == v) throw MalformedVC("loop at vertex " + std::to_string(u + 1));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw MalformedVC("repeated edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    }
  }
}

VCReduction reduce_vertex_cover(const VCInstance& vc) {
  validate_vertex_cover(vc);
  const int n = vc.vertices;
  const int m = static_cast<int>(vc.edges.size());
  // x_i = i, y_e = n + e, z_e = n + m + e
  std::vector<std::vector<Vertex>> rows(n);
  for (int e = 0; e < m; ++e) {
    rows[vc.edges[e].first].push_back(n + e);
    rows[vc.edges[e].second].push_back(n + e);
  }
  std::vector<VertexSet> nbhd(n);
  std::vector<Vertex> backbone, teeth;
  for (int e = 0; e < m; ++e) {
    backbone.push_back(n + m + e);
    teeth.push_back(n + e);
  }
  for (int i = 0; i < n; ++i) {
    rows[i].insert(rows[i].end(), backbone.begin(), backbone.end());
    nbhd[i] = make_vertex_set(std::move(rows[i]));
  }
  VCReduction out;
  out.instance = covering_instance(SplitGraph::from_neighborhoods(n, 2 * m, std::move(nbhd)),
                                   ConvexStructure::comb(Side::Independent, backbone, teeth));
  out.instance.terminals = make_vertex_set(teeth);
  out.instance.budget = vc.budget;
  return out;
}

std::vector<int> vertex_cover_from_solution(const VCReduction& reduction, const VertexSet& steiner_set) {
  std::vector<int> out;
  for (Vertex v : steiner_set) {
    if (reduction.instance.graph.in_clique(v)) out.push_back(v);
  }
  return out;
}

bool is_vertex_cover(const VCInstance& vc, const std::vector<int>& cover) {
  const VertexSet c = make_vertex_set(cover);
  return std::all_of(vc.edges.begin(), vc.edges.end(),
                     [&](const Edge& e) { return contains(c, e.first) || contains(c, e.second); });
}

int min_vertex_cover(const VCInstance& vc) {
  validate_vertex_cover(vc);
  if (vc.vertices > 24) throw CapExceeded("vertex cover brute force is limited to 24 vertices");
  int best = vc.vertices;
  for (std::uint32_t mask = 0; mask < (1u << vc.vertices); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (auto [u, v] : vc.edges) {
      if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

ChordalReduction reduce_split_to_chordal_convex(const SplitGraph& graph) {
  const int m = graph.clique_size();
  const int n = graph.independent_size();
  for (Vertex x : graph.independent()) {
    if (graph.clique_neighbors(x).empty()) throw Infeasible(graph.label(x) + " has no clique neighbor");
  }
  // target: w_i = i, y_j = m + j, x_j = m + n + j
  const int big_k = m + n;
  std::vector<VertexSet> nbhd(big_k);
  for (Vertex u : graph.clique()) {
    std::vector<Vertex> row;
    for (Vertex x : graph.independent_neighbors(u)) row.push_back(big_k + (x - m));
    nbhd[u] = make_vertex_set(std::move(row));
  }
  for (int j = 0; j < n; ++j) nbhd[m + j] = {big_k + j};

  std::vector<Vertex> vertices(big_k);
  for (int v = 0; v < big_k; ++v) vertices[v] = v;
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) edges.emplace_back(a, b);
  }
  for (int j = 0; j < n; ++j) {
    for (Vertex u : graph.clique_neighbors(m + j)) edges.emplace_back(u, m + j);
  }

  ChordalReduction out;
  out.source_clique = m;
  out.source_independent = n;
  out.instance = covering_instance(SplitGraph::from_neighborhoods(big_k, n, std::move(nbhd)),
                                   ConvexStructure::chordal(Side::Clique, vertices, edges));
  return out;
}

VertexSet chordal_solution_to_source(const ChordalReduction& reduction, const SplitGraph& source,
                                     const VertexSet& steiner_set) {
  const int m = reduction.source_clique;
  const int n = reduction.source_independent;
  if (source.clique_size() != m || source.independent_size() != n) {
    throw CorruptCertificate("source graph does not match the reduction");
  }
  std::vector<Vertex> out;
  for (Vertex v : steiner_set) {
    if (v < 0 || v >= m + n) throw CorruptCertificate("Steiner vertex outside K*");
    out.push_back(v < m ? v : source.clique_neighbors(v).front());
  }
  return make_vertex_set(std::move(out));
}

}  // namespace splitsteiner
