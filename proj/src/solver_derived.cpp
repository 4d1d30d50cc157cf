#include "splitsteiner/solver_derived.hpp"

#include <algorithm>

#include "splitsteiner/errors.hpp"
#include "splitsteiner/solver_path.hpp"
#include "splitsteiner/solver_tree_k.hpp"

namespace splitsteiner {

namespace {

/// Builds a derived instance. Clique vertex c sees the I-vertices whose
/// indices are listed in k_nbhd[c]; `order` lists indices on `path_side`.
DerivedInstance build_part(const std::vector<Vertex>& k_origin, const std::vector<Vertex>& i_origin,
                           const std::vector<std::vector<int>>& k_nbhd, Side path_side,
                           const std::vector<int>& order) {
  const int m = static_cast<int>(k_origin.size());
  const int n = static_cast<int>(i_origin.size());
  std::vector<VertexSet> nbhd(m);
  for (int c = 0; c < m; ++c) {
    for (int j : k_nbhd[c]) nbhd[c].push_back(m + j);
  }
  DerivedInstance out;
  out.origin = k_origin;
  out.origin.insert(out.origin.end(), i_origin.begin(), i_origin.end());
  SplitGraph graph = SplitGraph::from_neighborhoods(m, n, std::move(nbhd));
  std::vector<Vertex> path;
  for (int idx : order) path.push_back(path_side == Side::Clique ? idx : m + idx);
  out.instance = covering_instance(std::move(graph), ConvexStructure::path(path_side, std::move(path)));
  return out;
}

std::string origin_label(const SplitGraph& g, Vertex v) {
  switch (v) {
    case kAuxAlpha1: return "alpha1";
    case kAuxAlpha2: return "alpha2";
    case kAuxBeta1: return "beta1";
    case kAuxBeta2: return "beta2";
    default: return g.label(v);
  }
}

/// Marks the case infeasible if some I-vertex of a part has no neighbor.
void check_parts(const SplitGraph& g, CaseSubinstances& c) {
  for (const auto& part : c.parts) {
    const SplitGraph& pg = part.instance.graph;
    for (Vertex x : pg.independent()) {
      if (pg.clique_neighbors(x).empty()) {
        c.feasible = false;
        c.skip_reason = "anchors " + [&] {
          std::string s;
          for (Vertex a : c.anchors) s += (s.empty() ? "" : ",") + g.label(a);
          return s;
        }() + " leave " + origin_label(g, part.origin[x]) + " without a usable neighbor";
        return;
      }
    }
  }
}

void require_structure(const ProblemInstance& instance, StructureKind kind, Side side,
                       const char* what) {
  const auto& s = instance.structure;
  if (!s || s->kind() != kind || s->side() != side) {
    throw StructureMismatch(std::string(what) + " solver needs a " +
                            std::string(to_string(kind)) + " structure on " +
                            std::string(to_string(side)));
  }
  const auto report = verify_convexity(instance.graph, *s);
  if (!report.valid) {
    throw StructureMismatch(std::string("declared ") + std::string(to_string(kind)) +
                            " layout is not convex: " + report.violations.front().reason);
  }
  require_terminals_are_independent_set(instance);
}

/// Runs every case, solving parts with `solve_part`, and keeps the smallest
/// assembly. Ties keep the earliest case.
SteinerSolution run_cases(std::vector<CaseSubinstances> cases,
                          const std::function<SteinerSolution(const ProblemInstance&)>& solve_part,
                          std::string method) {
  SteinerSolution out;
  out.method = std::move(method);
  std::optional<VertexSet> best;
  for (auto& c : cases) {
    ++out.stats.cases;
    if (!c.feasible) {
      ++out.stats.skipped_cases;
      out.stats.notes.push_back(c.skip_reason);
      continue;
    }
    std::vector<VertexSet> solutions;
    for (const auto& part : c.parts) {
      ++out.stats.path_solver_calls;
      solutions.push_back(solve_part(part.instance).steiner_set);
    }
    VertexSet candidate = assemble(c, solutions);
    if (!best || candidate.size() < best->size()) {
      best = std::move(candidate);
      out.stats.anchors = static_cast<int>(c.anchors.size());
    }
  }
  if (!best) throw Infeasible("no anchored case is feasible");
  out.steiner_set = std::move(*best);
  return out;
}

/// Positions of the cycle layout, -1 for vertices not on it.
std::vector<int> cycle_positions(const SplitGraph& g, const CycleLayout& cycle) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < cycle.order.size(); ++i) pos[cycle.order[i]] = static_cast<int>(i);
  return pos;
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

}  // namespace

VertexSet assemble(const CaseSubinstances& c, const std::vector<VertexSet>& part_solutions) {
  if (part_solutions.size() != c.parts.size()) {
    throw InvalidParameter("one solution per derived part expected");
  }
  std::vector<Vertex> out(c.fixed.begin(), c.fixed.end());
  for (std::size_t p = 0; p < c.parts.size(); ++p) {
    for (Vertex v : part_solutions[p]) {
      const Vertex o = c.parts[p].origin.at(v);
      if (o >= 0) out.push_back(o);
    }
  }
  return make_vertex_set(std::move(out));
}

// ---------------------------------------------------------------- triad on I

CaseSubinstances triad_case(const ProblemInstance& instance, const VertexSet& anchors) {
  const SplitGraph& g = instance.graph;
  const auto* triad = instance.structure ? instance.structure->get_if<TriadLayout>() : nullptr;
  if (triad == nullptr) throw StructureMismatch("triad case needs a triad structure");
  const VertexSet& root_nbhd = g.clique_neighbors(triad->root);
  if (anchors.empty() || anchors.size() > 3 || !is_subset(anchors, root_nbhd)) {
    throw InvalidParameter("triad anchors must be 1 to 3 neighbors of the root");
  }

  CaseSubinstances c;
  c.anchors = anchors;
  c.fixed = anchors;
  VertexSet covered;
  for (Vertex a : anchors) covered = set_union(covered, g.independent_neighbors(a));

  for (const auto& leg : triad->legs) {
    std::vector<Vertex> i_origin;
    for (Vertex x : leg) {
      if (!contains(covered, x)) i_origin.push_back(x);
    }
    if (i_origin.empty()) continue;
    std::vector<int> index(g.order(), -1);
    for (std::size_t j = 0; j < i_origin.size(); ++j) index[i_origin[j]] = static_cast<int>(j);

    std::vector<Vertex> k_origin;
    std::vector<std::vector<int>> k_nbhd;
    for (Vertex u : g.clique()) {
      if (contains(root_nbhd, u)) continue;
      std::vector<int> seen;
      for (Vertex x : g.independent_neighbors(u)) {
        if (index[x] >= 0) seen.push_back(index[x]);
      }
      if (seen.empty()) continue;
      k_origin.push_back(u);
      k_nbhd.push_back(std::move(seen));
    }
    std::vector<int> order(i_origin.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
    c.parts.push_back(build_part(k_origin, i_origin, k_nbhd, Side::Independent, order));
  }
  check_parts(g, c);
  return c;
}

SteinerSolution solve_triad_convex_I(const ProblemInstance& instance) {
  require_structure(instance, StructureKind::Triad, Side::Independent, "triad");
  const SplitGraph& g = instance.graph;
  const Vertex z = instance.structure->get_if<TriadLayout>()->root;
  const VertexSet& nz = g.clique_neighbors(z);
  if (nz.empty()) throw Infeasible("triad root has no clique neighbor");

  std::vector<CaseSubinstances> cases;
  const int s = static_cast<int>(nz.size());
  for (int a = 0; a < s; ++a) {
    cases.push_back(triad_case(instance, {nz[a]}));
    for (int b = a + 1; b < s; ++b) {
      cases.push_back(triad_case(instance, {nz[a], nz[b]}));
      for (int c = b + 1; c < s; ++c) cases.push_back(triad_case(instance, {nz[a], nz[b], nz[c]}));
    }
  }
  return run_cases(std::move(cases), solve_path_convex_I, "triad");
}

// ------------------------------------------------------------- circular on I

Vertex circular_pivot(const SplitGraph& g) {
  Vertex best = -1;
  for (Vertex x : g.independent()) {
    if (best < 0 || g.clique_neighbors(x).size() < g.clique_neighbors(best).size()) best = x;
  }
  if (best < 0) throw InvalidParameter("pivot needs a nonempty independent set");
  return best;
}

namespace {

struct ArcExtent {
  int left = 0;   ///< how far the arc reaches counter-clockwise from the pivot
  int right = 0;  ///< and clockwise
  bool full = false;
};

/// Extent of N^I(u) around the pivot position p on the I-cycle.
ArcExtent arc_around(const SplitGraph& g, const std::vector<int>& pos, int n, int p, Vertex u) {
  std::vector<char> in(n, 0);
  for (Vertex x : g.independent_neighbors(u)) in[pos[x]] = 1;
  ArcExtent e;
  if (static_cast<int>(g.independent_neighbors(u).size()) == n) {
    e.full = true;
    return e;
  }
  while (in[wrap(p - e.left - 1, n)]) ++e.left;
  while (in[wrap(p + e.right + 1, n)]) ++e.right;
  return e;
}

struct CircleCut {
  std::vector<Vertex> i_origin;  ///< β2, x_{p+1}, ..., x_{p-1}, β1
  std::vector<int> index;        ///< original id -> index in i_origin
};

CircleCut cut_I_circle(const SplitGraph& g, const CycleLayout& cycle, int p) {
  const int n = static_cast<int>(cycle.order.size());
  CircleCut cut;
  cut.index.assign(g.order(), -1);
  cut.i_origin.push_back(kAuxBeta2);
  for (int step = 1; step < n; ++step) {
    const Vertex x = cycle.order[wrap(p + step, n)];
    cut.index[x] = static_cast<int>(cut.i_origin.size());
    cut.i_origin.push_back(x);
  }
  cut.i_origin.push_back(kAuxBeta1);
  return cut;
}

/// Indices of x_{p-left}..x_{p-1} then x_{p+1}..x_{p+right} in the cut.
std::vector<int> left_half(const CircleCut& cut, const CycleLayout& cycle, int p, int left) {
  const int n = static_cast<int>(cycle.order.size());
  std::vector<int> out;
  for (int s = left; s >= 1; --s) out.push_back(cut.index[cycle.order[wrap(p - s, n)]]);
  return out;
}
std::vector<int> right_half(const CircleCut& cut, const CycleLayout& cycle, int p, int right) {
  const int n = static_cast<int>(cycle.order.size());
  std::vector<int> out;
  for (int s = 1; s <= right; ++s) out.push_back(cut.index[cycle.order[wrap(p + s, n)]]);
  return out;
}

/// Clique vertices outside N(pivot), with their neighborhoods in the cut.
void add_outside_pivot(const SplitGraph& g, Vertex pivot, const CircleCut& cut,
                       std::vector<Vertex>& k_origin, std::vector<std::vector<int>>& k_nbhd) {
  const VertexSet& np = g.clique_neighbors(pivot);
  for (Vertex u : g.clique()) {
    if (contains(np, u)) continue;
    std::vector<int> seen;
    for (Vertex x : g.independent_neighbors(u)) seen.push_back(cut.index[x]);
    k_origin.push_back(u);
    k_nbhd.push_back(std::move(seen));
  }
}

std::vector<int> iota_order(std::size_t n) {
  std::vector<int> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = static_cast<int>(j);
  return order;
}

const CycleLayout& require_cycle(const ProblemInstance& instance, Side side) {
  const auto* cycle = instance.structure ? instance.structure->get_if<CycleLayout>() : nullptr;
  if (cycle == nullptr || instance.structure->side() != side) {
    throw StructureMismatch(std::string("construction needs a cycle structure on ") +
                            std::string(to_string(side)));
  }
  return *cycle;
}

}  // namespace

CaseSubinstances circular_I_single(const ProblemInstance& instance, Vertex pivot, Vertex anchor) {
  const SplitGraph& g = instance.graph;
  const CycleLayout& cycle = require_cycle(instance, Side::Independent);
  if (!g.adjacent(pivot, anchor)) throw InvalidParameter("anchor must neighbor the pivot");
  const int n = static_cast<int>(cycle.order.size());
  const auto pos = cycle_positions(g, cycle);
  const int p = pos[pivot];

  CaseSubinstances c;
  c.anchors = {anchor};
  c.fixed = {anchor};
  const ArcExtent arc = arc_around(g, pos, n, p, anchor);
  if (arc.full) return c;

  const CircleCut cut = cut_I_circle(g, cycle, p);
  const int beta2 = 0;
  const int beta1 = static_cast<int>(cut.i_origin.size()) - 1;
  std::vector<Vertex> k_origin{kAuxAlpha1, kAuxAlpha2};
  std::vector<std::vector<int>> k_nbhd(2);
  k_nbhd[0] = left_half(cut, cycle, p, arc.left);
  k_nbhd[0].push_back(beta1);
  k_nbhd[1] = right_half(cut, cycle, p, arc.right);
  k_nbhd[1].insert(k_nbhd[1].begin(), beta2);
  add_outside_pivot(g, pivot, cut, k_origin, k_nbhd);
  c.parts.push_back(build_part(k_origin, cut.i_origin, k_nbhd, Side::Independent,
                               iota_order(cut.i_origin.size())));
  check_parts(g, c);
  return c;
}

CaseSubinstances circular_I_pair(const ProblemInstance& instance, Vertex pivot, Vertex first,
                                 Vertex second) {
  const SplitGraph& g = instance.graph;
  const CycleLayout& cycle = require_cycle(instance, Side::Independent);
  if (first == second || !g.adjacent(pivot, first) || !g.adjacent(pivot, second)) {
    throw InvalidParameter("anchors must be two distinct neighbors of the pivot");
  }
  const int n = static_cast<int>(cycle.order.size());
  const auto pos = cycle_positions(g, cycle);
  const int p = pos[pivot];

  CaseSubinstances c;
  c.anchors = make_vertex_set({first, second});
  const ArcExtent a1 = arc_around(g, pos, n, p, first);
  const ArcExtent a2 = arc_around(g, pos, n, p, second);
  const int left = std::max(a1.left, a2.left);
  const int right = std::max(a1.right, a2.right);
  if (a1.full || a2.full || left + right + 1 >= n) {
    c.fixed = c.anchors;
    return c;
  }

  const CircleCut cut = cut_I_circle(g, cycle, p);
  const int beta2 = 0;
  const int beta1 = static_cast<int>(cut.i_origin.size()) - 1;
  std::vector<Vertex> k_origin{first, second};
  std::vector<std::vector<int>> k_nbhd(2);
  k_nbhd[0] = left_half(cut, cycle, p, left);
  k_nbhd[0].push_back(beta1);
  k_nbhd[1] = right_half(cut, cycle, p, right);
  k_nbhd[1].insert(k_nbhd[1].begin(), beta2);
  add_outside_pivot(g, pivot, cut, k_origin, k_nbhd);
  c.parts.push_back(build_part(k_origin, cut.i_origin, k_nbhd, Side::Independent,
                               iota_order(cut.i_origin.size())));
  check_parts(g, c);
  return c;
}

SteinerSolution solve_circular_convex_I(const ProblemInstance& instance) {
  require_structure(instance, StructureKind::Cycle, Side::Independent, "circular-I");
  const SplitGraph& g = instance.graph;
  SteinerSolution out;
  out.method = "circular-i";
  if (g.independent_size() == 0) return out;
  const Vertex pivot = circular_pivot(g);
  const VertexSet& np = g.clique_neighbors(pivot);
  if (np.empty()) throw Infeasible(g.label(pivot) + " has no clique neighbor");

  std::vector<CaseSubinstances> cases;
  for (std::size_t a = 0; a < np.size(); ++a) {
    cases.push_back(circular_I_single(instance, pivot, np[a]));
    for (std::size_t b = a + 1; b < np.size(); ++b) {
      cases.push_back(circular_I_pair(instance, pivot, np[a], np[b]));
    }
  }
  // Single-anchor parts count α1 and α2 in place of the anchor; assemble()
  // drops them and adds the anchor back, so sizes compare directly.
  return run_cases(std::move(cases), solve_path_convex_I, "circular-i");
}

// ------------------------------------------------------------- circular on K

namespace {

/// Clique positions of N(z) in cycle order, starting at the arc's first
/// vertex. A full circle starts at position 0.
std::vector<int> pivot_arc(const SplitGraph& g, const std::vector<int>& pos, int m, Vertex z) {
  std::vector<char> in(m, 0);
  for (Vertex u : g.clique_neighbors(z)) in[pos[u]] = 1;
  const int count = static_cast<int>(g.clique_neighbors(z).size());
  int start = 0;
  if (count < m) {
    while (!(in[start] && !in[wrap(start - 1, m)])) ++start;
  }
  std::vector<int> arc;
  for (int step = 0; step < count; ++step) arc.push_back(wrap(start + step, m));
  return arc;
}

/// Path instance on the clique positions `keep` (in order) covering `targets`.
DerivedInstance clique_path_part(const SplitGraph& g, const CycleLayout& cycle,
                                 const std::vector<int>& keep, const VertexSet& targets) {
  std::vector<int> index(g.order(), -1);
  std::vector<Vertex> i_origin(targets.begin(), targets.end());
  for (std::size_t j = 0; j < i_origin.size(); ++j) index[i_origin[j]] = static_cast<int>(j);
  std::vector<Vertex> k_origin;
  std::vector<std::vector<int>> k_nbhd;
  for (int q : keep) {
    const Vertex u = cycle.order[q];
    std::vector<int> seen;
    for (Vertex x : g.independent_neighbors(u)) {
      if (index[x] >= 0) seen.push_back(index[x]);
    }
    k_origin.push_back(u);
    k_nbhd.push_back(std::move(seen));
  }
  return build_part(k_origin, i_origin, k_nbhd, Side::Clique, iota_order(k_origin.size()));
}

}  // namespace

CaseSubinstances circular_K_single(const ProblemInstance& instance, Vertex pivot, Vertex anchor) {
  const SplitGraph& g = instance.graph;
  const CycleLayout& cycle = require_cycle(instance, Side::Clique);
  if (!g.adjacent(pivot, anchor)) throw InvalidParameter("anchor must neighbor the pivot");
  const int m = static_cast<int>(cycle.order.size());
  const auto pos = cycle_positions(g, cycle);
  const auto arc = pivot_arc(g, pos, m, pivot);

  CaseSubinstances c;
  c.anchors = {anchor};
  c.fixed = {anchor};
  const VertexSet targets = set_difference(g.independent(), g.independent_neighbors(anchor));
  if (targets.empty()) return c;
  std::vector<int> keep;
  for (int step = static_cast<int>(arc.size()); step < m; ++step) keep.push_back(wrap(arc.front() + step, m));
  c.parts.push_back(clique_path_part(g, cycle, keep, targets));
  check_parts(g, c);
  return c;
}

CaseSubinstances circular_K_pair(const ProblemInstance& instance, Vertex pivot, Vertex first,
                                 Vertex second) {
  const SplitGraph& g = instance.graph;
  const CycleLayout& cycle = require_cycle(instance, Side::Clique);
  if (first == second || !g.adjacent(pivot, first) || !g.adjacent(pivot, second)) {
    throw InvalidParameter("anchors must be two distinct neighbors of the pivot");
  }
  const int m = static_cast<int>(cycle.order.size());
  const auto pos = cycle_positions(g, cycle);
  const auto arc = pivot_arc(g, pos, m, pivot);
  auto at = [&](Vertex u) {
    return static_cast<int>(std::find(arc.begin(), arc.end(), pos[u]) - arc.begin());
  };
  const int lo = std::min(at(first), at(second));
  const int hi = std::max(at(first), at(second));

  CaseSubinstances c;
  c.anchors = make_vertex_set({first, second});
  c.fixed = c.anchors;
  const VertexSet targets = set_difference(
      g.independent(), set_union(g.independent_neighbors(first), g.independent_neighbors(second)));
  if (targets.empty()) return c;
  // Everything but the stretch arc[lo..hi], read clockwise from just after it.
  std::vector<int> keep;
  const int removed = hi - lo + 1;
  for (int step = 1; step <= m - removed; ++step) keep.push_back(wrap(arc[hi] + step, m));
  c.parts.push_back(clique_path_part(g, cycle, keep, targets));
  check_parts(g, c);
  return c;
}

SteinerSolution solve_circular_convex_K(const ProblemInstance& instance) {
  require_structure(instance, StructureKind::Cycle, Side::Clique, "circular-K");
  const SplitGraph& g = instance.graph;
  SteinerSolution out;
  out.method = "circular-k";
  if (g.independent_size() == 0) return out;
  const Vertex pivot = circular_pivot(g);
  const VertexSet& nz = g.clique_neighbors(pivot);
  if (nz.empty()) throw Infeasible(g.label(pivot) + " has no clique neighbor");

  std::vector<CaseSubinstances> cases;
  for (std::size_t a = 0; a < nz.size(); ++a) {
    cases.push_back(circular_K_single(instance, pivot, nz[a]));
    for (std::size_t b = a + 1; b < nz.size(); ++b) {
      cases.push_back(circular_K_pair(instance, pivot, nz[a], nz[b]));
    }
  }
  return run_cases(std::move(cases), solve_tree_convex_K, "circular-k");
}

}  // namespace splitsteiner
