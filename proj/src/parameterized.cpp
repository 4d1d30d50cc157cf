#include "splitsteiner/parameterized.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

namespace {

struct BranchState {
  std::vector<char> live;      // clique vertices still available
  std::vector<char> covered;   // per I index
  std::vector<Vertex> chosen;
  int budget = 0;
};

class BranchSearch {
 public:
  BranchSearch(const SplitGraph& g, BranchStats& stats) : g_(g), stats_(stats) {}

  std::optional<VertexSet> run(BranchState state) {
    const int m = g_.clique_size();
    std::optional<Vertex> forced;
    bool any_uncovered = false;
    for (Vertex x : g_.independent()) {
      if (state.covered[x - m]) continue;
      any_uncovered = true;
      int live = 0;
      Vertex last = -1;
      for (Vertex u : g_.clique_neighbors(x)) {
        if (state.live[u]) {
          ++live;
          last = u;
        }
      }
      if (live == 0) return dead_end();
      if (live == 1 && !forced) forced = last;
    }
    if (!any_uncovered) {
      ++stats_.leaves;
      return make_vertex_set(state.chosen);
    }
    if (state.budget == 0) return dead_end();
    if (forced) {
      ++stats_.forced;
      return run(include(std::move(state), *forced));
    }

    Vertex pick = -1;
    int best = 0;
    for (Vertex u = 0; u < m; ++u) {
      if (!state.live[u]) continue;
      int gain = 0;
      for (Vertex x : g_.independent_neighbors(u)) gain += state.covered[x - m] ? 0 : 1;
      if (gain > best) {
        best = gain;
        pick = u;
      }
    }
    ++stats_.branch_nodes;
    BranchState without = state;
    without.live[pick] = 0;
    if (auto found = run(include(std::move(state), pick))) return found;
    return run(std::move(without));
  }

 private:
  std::optional<VertexSet> dead_end() {
    ++stats_.leaves;
    return std::nullopt;
  }

  BranchState include(BranchState state, Vertex u) const {
    state.live[u] = 0;
    state.chosen.push_back(u);
    --state.budget;
    for (Vertex x : g_.independent_neighbors(u)) state.covered[x - g_.clique_size()] = 1;
    return state;
  }

  const SplitGraph& g_;
  BranchStats& stats_;
};

}  // namespace

std::optional<VertexSet> fpt_branch_solve(const SplitGraph& graph, int budget, BranchStats* stats) {
  if (budget < 0) return std::nullopt;
  BranchStats local;
  BranchStats& st = stats ? *stats : local;
  BranchState start;
  start.live.assign(graph.clique_size(), 1);
  start.covered.assign(graph.independent_size(), 0);
  start.budget = budget;
  auto result = BranchSearch(graph, st).run(std::move(start));
  if (graph.clique_size() < 62 && st.leaves > (1L << graph.clique_size())) {
    throw Error("branching produced more than 2^|K| leaves");
  }
  return result;
}

SteinerSolution fpt_min(const SplitGraph& graph) {
  SteinerSolution out;
  out.method = "fpt";
  for (int k = 0; k <= graph.clique_size(); ++k) {
    BranchStats st;
    auto found = fpt_branch_solve(graph, k, &st);
    out.stats.search_nodes += st.branch_nodes;
    out.stats.search_leaves += st.leaves;
    if (found) {
      out.steiner_set = std::move(*found);
      return out;
    }
  }
  throw Infeasible("no covering set exists");
}

NormalizedDegrees normalize_degrees(const SplitGraph& graph) {
  const int m = graph.clique_size();
  const int n = graph.independent_size();
  NormalizedDegrees out;
  out.degree = graph.max_independent_degree();
  out.padding.original_clique = m;
  for (Vertex y : graph.independent()) {
    const int deficit = out.degree - static_cast<int>(graph.clique_neighbors(y).size());
    for (int i = 0; i < deficit; ++i) out.padding.serves.push_back(y);
  }
  const int pad = static_cast<int>(out.padding.serves.size());
  std::vector<VertexSet> nbhd(m + pad);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex x : graph.independent_neighbors(u)) nbhd[u].push_back(x + pad);
  }
  for (int p = 0; p < pad; ++p) nbhd[m + p].push_back(out.padding.serves[p] + pad);
  out.graph = SplitGraph::from_neighborhoods(m + pad, n, std::move(nbhd));
  return out;
}

long hitting_set_kernel_bound(int d, int k) {
  long power = 1;
  for (int i = 0; i < d - 1; ++i) power *= k;
  return (2L * d - 1) * power + k;
}

namespace {

using Family = std::set<VertexSet>;

VertexSet elements_of(const Family& family) {
  VertexSet out;
  for (const auto& s : family) out = set_union(out, s);
  return out;
}

bool remove_supersets(Family& family) {
  bool changed = false;
  for (auto it = family.begin(); it != family.end();) {
    bool drop = false;
    for (const auto& other : family) {
      if (other.size() < it->size() && is_subset(other, *it)) {
        drop = true;
        break;
      }
    }
    if (drop) {
      it = family.erase(it);
      changed = true;
    } else {
      ++it;
    }
  }
  return changed;
}

/// Sets containing each element.
std::map<Vertex, std::vector<const VertexSet*>> incidence(const Family& family) {
  std::map<Vertex, std::vector<const VertexSet*>> out;
  for (const auto& s : family) {
    for (Vertex e : s) out[e].push_back(&s);
  }
  return out;
}

/// Drops one element whose sets are a subset of another element's sets.
bool remove_dominated_element(Family& family, int original_clique) {
  const auto inc = incidence(family);
  for (const auto& [e, se] : inc) {
    for (const auto& [f, sf] : inc) {
      if (e == f || se.size() > sf.size()) continue;
      if (!std::all_of(se.begin(), se.end(), [&](const VertexSet* s) { return contains(*s, f); })) {
        continue;
      }
      if (se.size() == sf.size()) {
        // Identical incidence: drop padding first, then the larger id.
        const bool e_pad = e >= original_clique, f_pad = f >= original_clique;
        if (e_pad != f_pad ? !e_pad : e < f) continue;
      }
      Family next;
      for (const auto& s : family) next.insert(set_difference(s, {e}));
      family = std::move(next);
      return true;
    }
  }
  return false;
}

/// Looks for k + 1 sets sharing exactly a core C, pairwise disjoint outside
/// it. Petals are picked greedily. Returns the core if found.
std::optional<VertexSet> find_sunflower(const Family& family, int petals_needed) {
  std::set<VertexSet> tried;
  for (const auto& base : family) {
    const int d = static_cast<int>(base.size());
    for (int mask = 0; mask < (1 << d) - 1; ++mask) {
      VertexSet core;
      for (int i = 0; i < d; ++i) {
        if (mask >> i & 1) core.push_back(base[i]);
      }
      if (!tried.insert(core).second) continue;
      VertexSet used;
      int petals = 0;
      for (const auto& s : family) {
        if (s.size() <= core.size() || !is_subset(core, s)) continue;
        const VertexSet petal = set_difference(s, core);
        if (!set_intersection(petal, used).empty()) continue;
        used = set_union(used, petal);
        if (++petals >= petals_needed) return core;
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> branch_hitting_set(const std::vector<VertexSet>& sets, int budget,
                                            VertexSet chosen) {
  for (const auto& s : sets) {
    if (!set_intersection(s, chosen).empty()) continue;
    if (budget == 0) return std::nullopt;
    for (Vertex e : s) {
      if (auto found = branch_hitting_set(sets, budget - 1, set_union(chosen, {e}))) return found;
    }
    return std::nullopt;
  }
  return chosen;
}

}  // namespace

HittingSetKernel kernelize_hitting_set(const NormalizedDegrees& normalized, int budget) {
  if (budget < 0) throw NoInstance("negative budget");
  const SplitGraph& g = normalized.graph;
  const int pad_start = normalized.padding.original_clique;
  HittingSetKernel out;
  out.degree = normalized.degree;
  out.certificate.padding = normalized.padding;

  Family family;
  for (Vertex x : g.independent()) {
    if (g.clique_neighbors(x).empty()) throw NoInstance(g.label(x) + " cannot be covered");
    family.insert(g.clique_neighbors(x));
  }
  int k = budget;
  std::vector<Vertex> forced;

  bool changed = true;
  while (changed) {
    changed = false;
    if (family.count(VertexSet{})) throw NoInstance("an empty set cannot be hit");
    if (remove_supersets(family)) changed = true;

    for (const auto& s : family) {
      if (s.size() != 1) continue;
      const Vertex e = s.front();
      if (k == 0) throw NoInstance("budget exhausted by forced elements");
      forced.push_back(e);
      --k;
      Family next;
      for (const auto& t : family) {
        if (!contains(t, e)) next.insert(t);
      }
      family = std::move(next);
      changed = true;
      break;
    }
    if (changed) continue;

    if (remove_dominated_element(family, pad_start)) {
      changed = true;
      continue;
    }

    if (!family.empty()) {
      if (k == 0) throw NoInstance("sets remain but the budget is spent");
      std::size_t frequency = 0;
      for (const auto& [e, sets] : incidence(family)) frequency = std::max(frequency, sets.size());
      if (family.size() > static_cast<std::size_t>(k) * frequency) {
        throw NoInstance("more sets than k elements can hit");
      }
      if (auto core = find_sunflower(family, k + 1)) {
        if (core->empty()) throw NoInstance("k + 1 pairwise disjoint sets");
        ++out.sunflowers;
        family.insert(*core);
        changed = true;
      }
    }
  }

  VertexSet elements = elements_of(family);
  out.reduced_order = static_cast<long>(elements.size());
  if (static_cast<long>(elements.size()) > hitting_set_kernel_bound(out.degree, budget)) {
    out.fallback = true;
    const std::vector<VertexSet> sets(family.begin(), family.end());
    auto solution = branch_hitting_set(sets, k, {});
    if (!solution) throw NoInstance("exhaustive branching found no hitting set");
    forced.insert(forced.end(), solution->begin(), solution->end());
    k -= static_cast<int>(solution->size());
    family.clear();
    elements.clear();
  }

  std::vector<int> index(g.clique_size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  const int km = static_cast<int>(elements.size());
  const int kn = static_cast<int>(family.size());
  std::vector<VertexSet> nbhd(km);
  int j = 0;
  for (const auto& s : family) {
    for (Vertex e : s) nbhd[index[e]].push_back(km + j);
    ++j;
  }
  out.kernel = covering_instance(SplitGraph::from_neighborhoods(km, kn, std::move(nbhd)));
  out.kernel.budget = k;
  out.certificate.kernel_to_padded = elements;
  out.certificate.forced = make_vertex_set(std::move(forced));
  out.certificate.budget_delta = budget - k;
  return out;
}

VertexSet lift_solution(const KernelCertificate& certificate, const SplitGraph& original,
                        const VertexSet& kernel_solution) {
  std::vector<Vertex> padded(certificate.forced.begin(), certificate.forced.end());
  for (Vertex v : kernel_solution) {
    if (v < 0 || v >= static_cast<Vertex>(certificate.kernel_to_padded.size())) {
      throw CorruptCertificate("kernel vertex " + std::to_string(v) + " is not in the certificate");
    }
    padded.push_back(certificate.kernel_to_padded[v]);
  }
  const int m = certificate.padding.original_clique;
  if (m != original.clique_size()) throw CorruptCertificate("certificate is for another graph");
  std::vector<Vertex> out;
  for (Vertex p : padded) {
    if (p < 0) throw CorruptCertificate("negative vertex in certificate");
    if (p < m) {
      out.push_back(p);
      continue;
    }
    const std::size_t slot = static_cast<std::size_t>(p - m);
    if (slot >= certificate.padding.serves.size()) {
      throw CorruptCertificate("padding vertex " + std::to_string(p) + " is unknown");
    }
    const Vertex y = certificate.padding.serves[slot];
    if (!original.in_independent(y) || original.clique_neighbors(y).empty()) {
      throw CorruptCertificate("padding vertex serves an invalid I-vertex");
    }
    out.push_back(original.clique_neighbors(y).front());
  }
  VertexSet lifted = make_vertex_set(std::move(out));
  if (!covers_independent(original, lifted)) {
    throw CorruptCertificate("lifted set does not cover the original graph");
  }
  return lifted;
}

}  // namespace splitsteiner
