#include <doctest.h>

#include "fixtures.hpp"
#include "splitsteiner/dispatch.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/oracle.hpp"

using namespace splitsteiner;

TEST_CASE("method names round trip") {
  for (int i = 0; i <= static_cast<int>(Method::Oracle); ++i) {
    const auto m = static_cast<Method>(i);
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_method("greedy"), InvalidParameter);
}

TEST_CASE("auto picks by structure") {
  auto rng = fx::rng(6);
  CHECK(auto_method(fx::p1()).first == Method::Path);
  CHECK(auto_method(fx::x3c_graph()).first == Method::StarBounded);
  CHECK(auto_method(random_triad_convex_I(rng, 4, 2)).first == Method::Triad);
  CHECK(auto_method(random_circular_convex_I(rng, 4, 5)).first == Method::CircularI);
  CHECK(auto_method(random_circular_convex_K(rng, 4, 5)).first == Method::CircularK);
  CHECK(auto_method(random_tree_convex_K(rng, 4, 5)).first == Method::TreeK);
  CHECK(auto_method(random_comb_convex_I(rng, 4, 3)).first == Method::CombXp);
  const auto [m, why] = auto_method(random_comb_convex_I(rng, 6, 5));
  CHECK(m == Method::Fpt);
  CHECK_FALSE(why.empty());
  CHECK(auto_method(covering_instance(fx::p1_graph())).first == Method::Fpt);
}

TEST_CASE("solve on P1 and the x3c graph") {
  const SolveResult r = solve(fx::p1(), Method::Path);
  CHECK(r.solution.steiner_set == VertexSet{0, 1});
  CHECK(r.verified == true);
  CHECK(r.answer().empty());
  CHECK(r.exit_code() == 0);
  for (Method m : {Method::Auto, Method::Oracle, Method::Fpt, Method::KernelFpt, Method::StarBounded}) {
    const SolveResult f = solve(fx::x3c_graph(), m);
    CHECK(f.solution.size() == 2);
    CHECK(f.answer() == "yes");
    CHECK(f.witness.size() == 8);  // spanning tree on 9 vertices
  }
  CHECK_THROWS_AS(solve(fx::p1(), Method::Triad), StructureMismatch);
}

TEST_CASE("budget answers") {
  ProblemInstance f = fx::x3c_graph();
  f.budget = 1;
  const SolveResult exact = solve(f, Method::Auto);
  CHECK(exact.answer() == "no");
  CHECK(exact.exit_code() == 1);
}

TEST_CASE("arbitrary terminals through every exact method") {
  auto rng = fx::rng(17);
  for (int t = 0; t < 100; ++t) {
    ProblemInstance in = random_path_convex_I(rng, 3 + t % 4, 3 + t % 5);
    in.terminals = random_terminals(rng, in.graph);
    const int opt = oracle_min_steiner(in.graph, in.terminals).size();
    for (Method m : {Method::Auto, Method::Fpt, Method::KernelFpt}) {
      const SolveResult r = solve(in, m);
      CHECK(r.verified == true);
      CHECK(r.solution.size() == opt);
    }
  }
}

TEST_CASE("json document") {
  const auto doc = result_json(fx::x3c_graph(), solve(fx::x3c_graph(), Method::Oracle), false);
  CHECK(doc["steiner_set"] == nlohmann::ordered_json::array({2, 5}));
  CHECK(doc["labels"] == nlohmann::ordered_json::array({"w2", "w5"}));
  CHECK(doc["answer"] == "yes");
  CHECK_FALSE(doc.contains("millis"));
}
