#include <doctest.h>

#include "fixtures.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/instance_io.hpp"

using namespace splitsteiner;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_instance_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("fixture files parse") {
  const ProblemInstance p = read_instance_file(SPLITSTEINER_TEST_DATA "/p1.split");
  CHECK(p.graph == fx::p1_graph());
  CHECK(p.structure == fx::p1().structure);
  const ProblemInstance f = read_instance_file(SPLITSTEINER_TEST_DATA "/x3c.split");
  CHECK(f == fx::x3c_graph());
}

TEST_CASE("emit then parse is the identity") {
  auto rng = fx::rng(2);
  for (int t = 0; t < 40; ++t) {
    std::vector<ProblemInstance> all{
        random_path_convex_I(rng, 4, 6),  random_circular_convex_I(rng, 4, 6),
        random_triad_convex_I(rng, 4, 2), random_star_convex_I(rng, 4, 5),
        random_comb_convex_I(rng, 5, 3),  random_tree_convex_K(rng, 6, 5),
        random_circular_convex_K(rng, 5, 6),
        reduce_split_to_chordal_convex(random_split_graph(rng, 3, 4, 0.4)).instance,
        reduce_vertex_cover(random_vc(rng, 4, 0.5)).instance};
    for (auto& in : all) {
      if (t % 2) in.budget = t % 5;
      if (t % 3 == 0) in.terminals = random_terminals(rng, in.graph);
      const std::string text = emit_instance(in);
      CHECK(parse_instance_string(text) == in);
      CHECK(emit_instance(parse_instance_string(text)) == text);
    }
  }
}

TEST_CASE("parse errors carry the line") {
  CHECK(parse_error_line("split 1 1\ne 1 2\nbogus\n") == 3);
  CHECK(parse_error_line("# c\n\nsplit 1 x\n") == 3);
  CHECK(parse_error_line("e 1 2\n") == 1);
  CHECK(parse_error_line("split 1 1\ne 1 2\nstructure path on I\norder 1\n") == 4);
  CHECK(parse_error_line("split 1 1\ne 1 2\nbudget -1\n") == 3);
  CHECK(parse_error_line("split 1 1\ne 1 2\nterminals 9\n") == 3);
}

TEST_CASE("graph errors come through the parser") {
  CHECK_THROWS_AS(parse_instance_string("split 1 2\ne 1 2\n"), Disconnected);
  CHECK_THROWS_AS(parse_instance_string("split 1 2\ne 1 2\ne 1 3\ne 2 3\n"), PartitionViolation);
}

TEST_CASE("default terminals are I") {
  const ProblemInstance in = parse_instance_string("split 1 2\ne 1 2\ne 1 3\n");
  CHECK(in.terminals == VertexSet{1, 2});
  CHECK_FALSE(in.budget);
}

TEST_CASE("solution claims") {
  const SplitGraph g = fx::p1_graph();
  const SolutionClaim a = parse_solution("steiner 1 2\n", g);
  CHECK(a.kind == SolutionClaim::Kind::Steiner);
  CHECK(a.vertices == VertexSet{0, 1});
  const SolutionClaim b = parse_solution(R"({"dominating_set": [2, 3]})", g);
  CHECK(b.kind == SolutionClaim::Kind::Dominating);
  CHECK(b.vertices == VertexSet{1, 2});
  CHECK(parse_solution("steiner\n", g).vertices.empty());
  CHECK_THROWS_AS(parse_solution("steiner 99\n", g), ParseError);
  CHECK_THROWS_AS(parse_solution("{\"other\": 1}", g), ParseError);
  CHECK(to_file_ids({0, 4}) == std::vector<int>{1, 5});
}
