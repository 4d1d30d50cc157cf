#include <doctest.h>

#include "fixtures.hpp"
#include "splitsteiner/errors.hpp"
#include "splitsteiner/oracle.hpp"
#include "splitsteiner/parameterized.hpp"

using namespace splitsteiner;

TEST_CASE("fpt on the x3c graph") {
  const SplitGraph g = fx::x3c_graph().graph;
  BranchStats st;
  const auto found = fpt_branch_solve(g, 2, &st);
  REQUIRE(found);
  CHECK(covers_independent(g, *found));
  CHECK(st.leaves <= (1L << g.clique_size()));
  CHECK_FALSE(fpt_branch_solve(g, 1));
  CHECK_FALSE(fpt_branch_solve(g, 0));
  CHECK(fpt_min(g).size() == 2);
}

TEST_CASE("fpt feasibility matches the oracle at every k") {
  auto rng = fx::rng(31);
  for (int t = 0; t < 150; ++t) {
    const SplitGraph g = random_split_graph(rng, 2 + t % 8, 2 + t % 7, 0.3);
    const int opt = static_cast<int>(oracle_min_cover(g).size());
    for (int k = 0; k <= g.clique_size(); ++k) {
      BranchStats st;
      const auto found = fpt_branch_solve(g, k, &st);
      CHECK(found.has_value() == (k >= opt));
      CHECK(st.branch_nodes <= (1L << g.clique_size()));
    }
  }
}

TEST_CASE("normalize_degrees on P1") {
  const SplitGraph g = fx::p1_graph();
  const NormalizedDegrees nd = normalize_degrees(g);
  CHECK(nd.degree == 2);
  CHECK(nd.graph.clique_size() == 5);  // two padding vertices, for x1 and x4
  CHECK(nd.padding.serves == std::vector<Vertex>{3, 6});
  for (Vertex x : nd.graph.independent()) CHECK(nd.graph.clique_neighbors(x).size() == 2);
  // padding sits in the clique
  CHECK(nd.graph.adjacent(3, 0));
  CHECK(nd.graph.adjacent(3, 4));
}

TEST_CASE("normalize_degrees is the identity on uniform graphs") {
  const SplitGraph g = SplitGraph::from_neighborhoods(2, 2, {{2, 3}, {2, 3}});
  const NormalizedDegrees nd = normalize_degrees(g);
  CHECK(nd.graph == g);
  CHECK(nd.padding.serves.empty());
}

TEST_CASE("hitting-set kernel") {
  SUBCASE("identical neighborhoods collapse") {
    const SplitGraph g = SplitGraph::from_neighborhoods(2, 3, {{2, 3, 4}, {2, 3, 4}});
    const HittingSetKernel k = kernelize_hitting_set(normalize_degrees(g), 1);
    CHECK(k.kernel.graph.independent_size() <= 1);
  }
  SUBCASE("answers are preserved") {
    auto rng = fx::rng(64);
    for (int t = 0; t < 200; ++t) {
      const SplitGraph g = random_bounded_degree_split(rng, 3 + t % 5, 2 + t % 6, 2 + t % 2);
      const NormalizedDegrees nd = normalize_degrees(g);
      const int opt = static_cast<int>(oracle_min_cover(g).size());
      for (int k = 0; k <= 4; ++k) {
        bool kernel_yes = false;
        try {
          const HittingSetKernel ker = kernelize_hitting_set(nd, k);
          CHECK(ker.reduced_order <= hitting_set_kernel_bound(nd.degree, k));
          const auto found = fpt_branch_solve(ker.kernel.graph, *ker.kernel.budget);
          if (found) {
            kernel_yes = true;
            const VertexSet lifted = lift_solution(ker.certificate, g, *found);
            CHECK(covers_independent(g, lifted));
            CHECK(static_cast<int>(lifted.size()) <= k);
            for (Vertex v : lifted) CHECK(g.in_clique(v));
          }
        } catch (const NoInstance&) {
        }
        CHECK(kernel_yes == (k >= opt));
      }
    }
  }
}

TEST_CASE("kernel bound") {
  CHECK(hitting_set_kernel_bound(2, 3) == 3 * 3 + 3);
  CHECK(hitting_set_kernel_bound(3, 2) == 5 * 4 + 2);
}

TEST_CASE("lift_solution") {
  const SplitGraph g = fx::p1_graph();
  const NormalizedDegrees nd = normalize_degrees(g);
  KernelCertificate cert;
  cert.padding = nd.padding;
  for (Vertex v = 0; v < nd.graph.clique_size(); ++v) cert.kernel_to_padded.push_back(v);
  // without padding picks the set is unchanged
  CHECK(lift_solution(cert, g, {0, 1}) == VertexSet{0, 1});
  // padding vertex 3 served x1 whose only real neighbor is w1
  CHECK(lift_solution(cert, g, {1, 3}) == VertexSet{0, 1});
  CHECK_THROWS_AS(lift_solution(cert, g, {9}), CorruptCertificate);
  CHECK_THROWS_AS(lift_solution(cert, g, {2}), CorruptCertificate);
}
