#include "splitsteiner/oracle.hpp"

#include <bit>
#include <cstdint>
#include <functional>

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

namespace {

using Mask = std::uint64_t;

void check_cap(const SplitGraph& graph, const OracleOptions& options) {
  if (options.cap > 63) throw InvalidParameter("oracle cap above 63 vertices");
  if (graph.order() > options.cap) {
    throw CapExceeded("graph has " + std::to_string(graph.order()) +
                      " vertices, oracle cap is " + std::to_string(options.cap));
  }
}

std::vector<Mask> open_neighborhoods(const SplitGraph& graph) {
  std::vector<Mask> adj(graph.order(), 0);
  for (Vertex v = 0; v < graph.order(); ++v) {
    for (Vertex u : graph.neighbors(v)) adj[v] |= Mask{1} << u;
  }
  return adj;
}

bool connected(const std::vector<Mask>& adj, Mask members) {
  if (std::popcount(members) <= 1) return true;
  Mask reached = members & (~members + 1);
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= members & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == members;
}

/// Calls visit(mask) for every k-subset of `pool` in lexicographic index
/// order until it returns true.
bool for_each_subset(const std::vector<Vertex>& pool, int k,
                     const std::function<bool(Mask)>& visit) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << pool[i];
    if (visit(m)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexSet to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace

SteinerSolution oracle_min_steiner(const SplitGraph& graph, const VertexSet& terminals,
                                   const OracleOptions& options) {
  check_cap(graph, options);
  if (terminals.empty()) throw EmptyTerminals("terminal set is empty");
  Mask r = 0;
  for (Vertex v : terminals) {
    if (!graph.valid_vertex(v)) throw InvalidParameter("terminal outside the graph");
    r |= Mask{1} << v;
  }
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if ((r >> v & 1) == 0 && (!options.clique_only || graph.in_clique(v))) pool.push_back(v);
  }
  const auto adj = open_neighborhoods(graph);
  SteinerSolution out;
  out.method = "oracle";
  for (int k = 0; k <= static_cast<int>(pool.size()); ++k) {
    Mask found = 0;
    const bool ok = for_each_subset(pool, k, [&](Mask s) {
      ++out.stats.search_nodes;
      if (!connected(adj, s | r)) return false;
      found = s;
      return true;
    });
    if (ok) {
      out.steiner_set = to_set(found);
      return out;
    }
  }
  throw Infeasible("terminals cannot be connected");
}

namespace {

std::vector<Mask> coverage_masks(const SplitGraph& graph, Mask& all_independent) {
  all_independent = 0;
  for (Vertex x : graph.independent()) {
    if (graph.clique_neighbors(x).empty()) {
      throw Infeasible(graph.label(x) + " has no clique neighbor");
    }
    all_independent |= Mask{1} << x;
  }
  std::vector<Mask> cover(graph.clique_size(), 0);
  for (Vertex u = 0; u < graph.clique_size(); ++u) {
    for (Vertex x : graph.independent_neighbors(u)) cover[u] |= Mask{1} << x;
  }
  return cover;
}

Mask covered_by(const std::vector<Mask>& cover, Mask s) {
  Mask c = 0;
  for (; s; s &= s - 1) c |= cover[std::countr_zero(s)];
  return c;
}

}  // namespace

VertexSet oracle_min_cover(const SplitGraph& graph, const OracleOptions& options) {
  check_cap(graph, options);
  Mask target = 0;
  const auto cover = coverage_masks(graph, target);
  const VertexSet pool = graph.clique();
  for (int k = 0; k <= graph.clique_size(); ++k) {
    Mask found = 0;
    if (for_each_subset(pool, k, [&](Mask s) {
          if ((covered_by(cover, s) & target) != target) return false;
          found = s;
          return true;
        })) {
      return to_set(found);
    }
  }
  throw Infeasible("no covering set");
}

std::vector<VertexSet> oracle_all_min_covers(const SplitGraph& graph, const OracleOptions& options) {
  check_cap(graph, options);
  Mask target = 0;
  const auto cover = coverage_masks(graph, target);
  const VertexSet pool = graph.clique();
  std::vector<VertexSet> out;
  for (int k = 0; k <= graph.clique_size() && out.empty(); ++k) {
    for_each_subset(pool, k, [&](Mask s) {
      if ((covered_by(cover, s) & target) == target) out.push_back(to_set(s));
      return false;
    });
  }
  return out;
}

bool is_dominating(const SplitGraph& graph, const VertexSet& set, DominationVariant variant) {
  std::vector<char> dominated(graph.order(), 0);
  for (Vertex v : set) {
    if (!graph.valid_vertex(v)) return false;
    if (variant != DominationVariant::Total) dominated[v] = 1;
    for (Vertex u : graph.neighbors(v)) dominated[u] = 1;
  }
  for (char d : dominated) {
    if (!d) return false;
  }
  if (variant == DominationVariant::Connected) {
    return set.empty() ? graph.order() == 0 : verify_steiner(graph, set, {});
  }
  return true;
}

VertexSet oracle_min_dominating(const SplitGraph& graph, DominationVariant variant,
                                const OracleOptions& options) {
  check_cap(graph, options);
  const auto adj = open_neighborhoods(graph);
  const Mask all = graph.order() == 0 ? 0 : (Mask{1} << graph.order()) - 1;
  if (variant == DominationVariant::Total) {
    for (Vertex v = 0; v < graph.order(); ++v) {
      if (adj[v] == 0) throw Infeasible(graph.label(v) + " is isolated, no total dominating set");
    }
  }
  std::vector<Vertex> pool(graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) pool[v] = v;
  for (int k = 0; k <= graph.order(); ++k) {
    Mask found = 0;
    if (for_each_subset(pool, k, [&](Mask s) {
          Mask dom = variant == DominationVariant::Total ? 0 : s;
          for (Mask t = s; t; t &= t - 1) dom |= adj[std::countr_zero(t)];
          if (dom != all) return false;
          if (variant == DominationVariant::Connected && !connected(adj, s)) return false;
          found = s;
          return true;
        })) {
      return to_set(found);
    }
  }
  throw Infeasible("no dominating set of the requested kind");
}

}  // namespace splitsteiner
