#include <doctest.h>

#include "fixtures.hpp"
#include "splitsteiner/domination.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/oracle.hpp"
#include "splitsteiner/parameterized.hpp"
#include "splitsteiner/solver_path.hpp"

using namespace splitsteiner;

TEST_CASE("steiner set is a dominating, connected set") {
  auto rng = fx::rng(90);
  for (int t = 0; t < 200; ++t) {
    const ProblemInstance in = random_path_convex_I(rng, 2 + t % 6, 2 + t % 7);
    const DominationResult d = ds_via_stree(in.graph, in.structure, solve_path_convex_I);
    CHECK(is_dominating(in.graph, d.set, DominationVariant::Dominating));
    CHECK(is_dominating(in.graph, d.set, DominationVariant::Connected));
    CHECK(d.connected);
    CHECK(d.set.size() == oracle_min_dominating(in.graph, DominationVariant::Dominating).size());
    CHECK(d.set.size() == oracle_min_dominating(in.graph, DominationVariant::Connected).size());
    CHECK(d.total_degenerate == (d.set.size() == 1));
    CHECK(d.total == is_dominating(in.graph, d.set, DominationVariant::Total));
  }
}

TEST_CASE("single clique vertex is not total") {
  const SplitGraph g = SplitGraph::from_neighborhoods(1, 2, {{1, 2}});
  const DominationResult d = ds_via_stree(g, {}, [](const ProblemInstance& in) { return fpt_min(in.graph); });
  CHECK(d.set == VertexSet{0});
  CHECK(d.total_degenerate);
  CHECK_FALSE(d.total);
}

TEST_CASE("lone independent vertex") {
  const SplitGraph g = SplitGraph::from_neighborhoods(2, 1, {{}, {2}});
  const DominationResult d = ds_via_stree(g, {}, [](const ProblemInstance& in) { return fpt_min(in.graph); });
  CHECK(d.set == VertexSet{1});
  CHECK(is_dominating(g, d.set, DominationVariant::Dominating));
}

TEST_CASE("push into clique") {
  const SplitGraph g = fx::p1_graph();
  // {w2, w3, x1}: x1 moves to its only neighbor w1
  const VertexSet pushed = push_ds_into_clique(g, {1, 2, 3});
  CHECK(pushed == VertexSet{0, 1, 2});
  CHECK(is_dominating(g, pushed, DominationVariant::Dominating));
  const VertexSet from_i = push_ds_into_clique(g, {3, 4, 5, 6});
  CHECK(from_i.size() <= 4);
  for (Vertex v : from_i) CHECK(g.in_clique(v));
  CHECK(is_dominating(g, from_i, DominationVariant::Dominating));
  CHECK_THROWS_AS(push_ds_into_clique(g, {2}), InvalidParameter);
}

TEST_CASE("ds_to_stree is the identity") {
  const ProblemInstance in = ds_to_stree(fx::p1_graph(), 2);
  CHECK(in.graph == fx::p1_graph());
  CHECK(in.terminals == in.graph.independent());
  CHECK(in.budget == 2);
}

TEST_CASE("approximation is a valid tree") {
  auto rng = fx::rng(55);
  for (int t = 0; t < 200; ++t) {
    const SplitGraph g = random_split_graph(rng, 2 + t % 6, 2 + t % 6, 0.3);
    const VertexSet r = random_terminals(rng, g);
    const ApproxSteiner a = approx_steiner(g, r);
    CHECK(verify_steiner(g, r, a.solution.steiner_set));
    // a tree on S ∪ R
    CHECK(a.tree.size() + 1 == std::max<std::size_t>(1, set_union(r, a.solution.steiner_set).size()));
    CHECK(is_dominating(g, approx_dominating_set(g), DominationVariant::Dominating));
  }
  CHECK_THROWS_AS(approx_steiner(fx::p1_graph(), {}), EmptyTerminals);
}
