#pragma once

#include "splitsteiner/generate.hpp"
#include "splitsteiner/instance.hpp"
#include "splitsteiner/reductions.hpp"

namespace fx {

using namespace splitsteiner;

// w1..w3 = 0..2, x1..x4 = 3..6
inline SplitGraph p1_graph() {
  return SplitGraph::from_neighborhoods(3, 4, {{3, 4}, {4, 5, 6}, {5}});
}

inline ProblemInstance p1() {
  return covering_instance(p1_graph(), ConvexStructure::path(Side::Independent, {3, 4, 5, 6}));
}

// c1..c5 = 0..4, x1..x6 = 5..10, root x7 = 11
inline ProblemInstance x3c_graph() { return reduce_x3c(x3c_example()).instance; }

inline Rng rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace fx
