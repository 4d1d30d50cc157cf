#include <doctest.h>

#include "fixtures.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/oracle.hpp"

using namespace splitsteiner;

TEST_CASE("x3c example") {
  const X3CInstance x = x3c_example();
  CHECK_NOTHROW(validate_x3c(x));
  CHECK(x3c_has_exact_cover(x));
  CHECK(is_exact_cover(x, {1, 4}));
  CHECK_FALSE(is_exact_cover(x, {0, 3}));
  const X3CReduction red = reduce_x3c(x);
  CHECK(red.q == 2);
  CHECK(red.instance.budget == 2);
  CHECK(red.root == 11);
  const SteinerSolution s = oracle_min_steiner(red.instance.graph, red.instance.terminals);
  CHECK(x3c_sets_from_solution(red, s.steiner_set) == std::vector<int>{1, 4});
}

TEST_CASE("malformed x3c") {
  CHECK_THROWS_AS(validate_x3c({4, {{0, 1, 2}}}), MalformedX3C);
  CHECK_THROWS_AS(validate_x3c({3, {{0, 0, 1}}}), MalformedX3C);
  CHECK_THROWS_AS(validate_x3c({6, {{0, 1, 2}}}), MalformedX3C);
  CHECK_THROWS_AS(validate_x3c({3, {{0, 1, 5}}}), MalformedX3C);
}

TEST_CASE("x3c reduction preserves answers") {
  auto rng = fx::rng(12);
  for (int t = 0; t < 100; ++t) {
    const X3CInstance x = random_x3c(rng, 2, 3 + t % 4, t % 2 == 0);
    const X3CReduction red = reduce_x3c(x);
    const int opt = oracle_min_steiner(red.instance.graph, red.instance.terminals).size();
    CHECK((opt <= red.q) == x3c_has_exact_cover(x));
  }
}

TEST_CASE("vertex cover reduction") {
  const VCInstance tri{3, {{0, 1}, {1, 2}, {0, 2}}, 2};
  CHECK_NOTHROW(validate_vertex_cover(tri));
  CHECK(min_vertex_cover(tri) == 2);
  const VCReduction red = reduce_vertex_cover(tri);
  CHECK(red.instance.budget == 2);
  CHECK(red.instance.terminals == VertexSet{3, 4, 5});
  const SteinerSolution s = oracle_min_steiner(red.instance.graph, red.instance.terminals);
  CHECK(s.size() == 2);
  CHECK(is_vertex_cover(tri, vertex_cover_from_solution(red, s.steiner_set)));

  auto rng = fx::rng(13);
  for (int t = 0; t < 100; ++t) {
    const VCInstance vc = random_vc(rng, 3 + t % 3, 0.5);
    const VCReduction r = reduce_vertex_cover(vc);
    CHECK(oracle_min_steiner(r.instance.graph, r.instance.terminals).size() == min_vertex_cover(vc));
  }
}

TEST_CASE("malformed vertex cover") {
  CHECK_THROWS_AS(validate_vertex_cover({3, {}, 1}), MalformedVC);
  CHECK_THROWS_AS(validate_vertex_cover({3, {{0, 0}}, 1}), MalformedVC);
  CHECK_THROWS_AS(validate_vertex_cover({3, {{0, 1}, {1, 0}}, 1}), MalformedVC);
  CHECK_THROWS_AS(validate_vertex_cover({3, {{0, 3}}, 1}), MalformedVC);
}

TEST_CASE("split to chordal-convex") {
  auto rng = fx::rng(14);
  for (int t = 0; t < 100; ++t) {
    const SplitGraph g = random_split_graph(rng, 1 + t % 4, 1 + t % 5, 0.4);
    const ChordalReduction red = reduce_split_to_chordal_convex(g);
    CHECK(verify_convexity(red.instance.graph, *red.instance.structure).valid);
    const SteinerSolution s = oracle_min_steiner(red.instance.graph, red.instance.terminals);
    const VertexSet back = chordal_solution_to_source(red, g, s.steiner_set);
    CHECK(verify_steiner(g, g.independent(), back));
    CHECK(static_cast<int>(back.size()) <= s.size());
    CHECK(oracle_min_steiner(g, g.independent()).size() == s.size());
  }
}
