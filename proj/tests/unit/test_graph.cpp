#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/oracle.hpp"

using namespace splitsteiner;

namespace {

// union-find over S ∪ R, independent of verify_steiner's BFS
bool uf_connected(const SplitGraph& g, const VertexSet& r, const VertexSet& s) {
  if (!set_intersection(r, s).empty()) return false;
  const VertexSet all = set_union(r, s);
  if (all.empty()) return true;
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (g.adjacent(all[i], all[j])) parent[find(all[i])] = find(all[j]);
  const int root = find(all[0]);
  for (Vertex v : all)
    if (find(v) != root) return false;
  return true;
}

}  // namespace

TEST_CASE("smallest split graph") {
  const std::vector<Edge> e{{0, 1}};
  const SplitGraph g = SplitGraph::build(1, 1, e);
  CHECK(g.order() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.label(0) == "w1");
  CHECK(g.label(1) == "x1");
}

TEST_CASE("build rejects bad partitions") {
  SUBCASE("missing clique edge in explicit mode") {
    const std::vector<Edge> e{{0, 2}, {1, 2}};
    CHECK_THROWS_AS(SplitGraph::build(2, 1, e, SplitGraph::CliqueEdges::Explicit), PartitionViolation);
    const std::vector<Edge> full{{0, 1}, {0, 2}, {1, 2}};
    CHECK_NOTHROW(SplitGraph::build(2, 1, full, SplitGraph::CliqueEdges::Explicit));
  }
  SUBCASE("edge inside I") {
    const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}};
    CHECK_THROWS_AS(SplitGraph::build(1, 2, e), PartitionViolation);
  }
  SUBCASE("self loop and range") {
    const std::vector<Edge> loop{{0, 0}, {0, 1}};
    CHECK_THROWS_AS(SplitGraph::build(1, 1, loop), PartitionViolation);
    const std::vector<Edge> far{{0, 7}};
    CHECK_THROWS_AS(SplitGraph::build(1, 1, far), PartitionViolation);
  }
  SUBCASE("disconnected") {
    const std::vector<Edge> e{{0, 1}};
    CHECK_THROWS_AS(SplitGraph::build(1, 2, e), Disconnected);
  }
}

TEST_CASE("x3c graph is a valid star-convex split graph") {
  const ProblemInstance f = fx::x3c_graph();
  CHECK(f.graph.clique_size() == 5);
  CHECK(f.graph.independent_size() == 7);
  CHECK(f.graph.is_connected());
  CHECK(f.graph.clique_neighbors(11) == VertexSet{0, 1, 2, 3, 4});
  CHECK(verify_convexity(f.graph, *f.structure).valid);
}

TEST_CASE("verify_steiner on the x3c graph") {
  const ProblemInstance f = fx::x3c_graph();
  const VertexSet r = f.graph.independent();
  CHECK(verify_steiner(f.graph, r, {1, 4}));
  // c1 alone misses x4, x5, x6
  CHECK_FALSE(verify_steiner(f.graph, r, {0}));
  // overlapping S and R is never a Steiner set
  CHECK_FALSE(verify_steiner(f.graph, r, {1, 4, 5}));
  VertexSet everything = f.graph.clique();
  everything = set_union(everything, r);
  CHECK(verify_steiner(f.graph, everything, {}));
}

TEST_CASE("verify_steiner agrees with union-find") {
  auto rng = fx::rng(11);
  for (int t = 0; t < 300; ++t) {
    const SplitGraph g = random_split_graph(rng, 1 + t % 5, 1 + t % 6, 0.4);
    const VertexSet r = random_terminals(rng, g);
    VertexSet s;
    for (Vertex v = 0; v < g.order(); ++v)
      if (!contains(r, v) && rng() % 3 == 0) s.push_back(v);
    CHECK(verify_steiner(g, r, s) == uf_connected(g, r, s));
  }
}

TEST_CASE("generated split graphs keep their invariants") {
  auto rng = fx::rng(5);
  for (int t = 0; t < 100; ++t) {
    const SplitGraph g = random_split_graph(rng, 1 + t % 7, 1 + t % 9, 0.3);
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b) {
        if (g.in_clique(a) && g.in_clique(b)) CHECK(g.adjacent(a, b));
        if (g.in_independent(a) && g.in_independent(b)) CHECK_FALSE(g.adjacent(a, b));
      }
    CHECK(g.is_connected());
  }
}

TEST_CASE("induced subgraph keeps origins") {
  const SplitGraph g = fx::p1_graph();
  const InducedSubgraph sub = induced_subgraph(g, {1, 2}, {4, 5});
  CHECK(sub.graph.clique_size() == 2);
  CHECK(sub.graph.independent_size() == 2);
  CHECK(sub.origin == std::vector<Vertex>{1, 2, 4, 5});
  CHECK(sub.graph.independent_neighbors(0) == VertexSet{2, 3});
  CHECK(sub.graph.independent_neighbors(1) == VertexSet{3});
}

TEST_CASE("normalize_terminals cases") {
  const ProblemInstance f = fx::x3c_graph();

  SUBCASE("R inside K is trivial") {
    ProblemInstance in = f;
    in.terminals = f.graph.clique();
    const NormalizedInstance n = normalize_terminals(in);
    CHECK(n.trivial);
    CHECK(lift_normalized(n, {}).empty());
  }
  SUBCASE("R = I is the identity") {
    const NormalizedInstance n = normalize_terminals(f);
    CHECK_FALSE(n.trivial);
    CHECK(n.instance.graph == f.graph);
    CHECK(n.mandated.empty());
  }
  SUBCASE("mixed terminals") {
    ProblemInstance in = f;
    in.terminals = {0, 8};  // c1, x4
    const NormalizedInstance n = normalize_terminals(in);
    CHECK(n.mandated == VertexSet{0});
    const VertexSet lifted = lift_normalized(n, oracle_min_cover(n.instance.graph));
    CHECK(verify_steiner(f.graph, in.terminals, lifted));
    CHECK(static_cast<int>(lifted.size()) == oracle_min_steiner(f.graph, in.terminals).size());
  }
  SUBCASE("empty") {
    ProblemInstance in = f;
    in.terminals = {};
    CHECK_THROWS_AS(normalize_terminals(in), EmptyTerminals);
  }
}

TEST_CASE("normalize_terminals round trip against the oracle") {
  auto rng = fx::rng(77);
  for (int t = 0; t < 400; ++t) {
    const SplitGraph g = random_split_graph(rng, 1 + t % 6, 1 + (t / 6) % 6, 0.35);
    ProblemInstance in{g, {}, random_terminals(rng, g), {}};
    const NormalizedInstance n = normalize_terminals(in);
    VertexSet lifted;
    if (!n.trivial) lifted = lift_normalized(n, oracle_min_cover(n.instance.graph));
    CAPTURE(t);
    CHECK(verify_steiner(g, in.terminals, lifted));
    CHECK(static_cast<int>(lifted.size()) == oracle_min_steiner(g, in.terminals).size());
  }
}

TEST_CASE("validate_instance") {
  ProblemInstance in = fx::p1();
  in.budget = 8;
  CHECK_THROWS_AS(validate_instance(in), InvalidParameter);
  in.budget = 7;
  CHECK_NOTHROW(validate_instance(in));
  in.terminals.push_back(9);
  CHECK_THROWS_AS(validate_instance(in), InvalidParameter);
}
