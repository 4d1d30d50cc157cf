#pragma once

#include <iosfwd>
#include <string>

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

/// Line-oriented instance format, 1-based ids (K = 1..m, I = m+1..m+n):
///
///   split <m> <n>
///   e <u> <v>                       K-I edge (K-K edges are implied, accepted)
///   structure <kind> on <K|I>
///   order <v> ...                   path, cycle
///   tree <p> ...                    parent of each side vertex in id order, 0 = root
///   star root <v>                   every other side vertex is a leaf
///   comb backbone <v> ... teeth <v> ...
///   triad root <v> legs <a> <b> ... | <c> <d> ... | <e> <f> ...
///   chordal e <u> <v>               one line per imaginary edge
///   terminals <v> ...  |  terminals I
///   budget <k>
///
/// '#' starts a comment. Without a terminals line R = I.
/// Throws ParseError (with the line), plus the graph and layout errors.
ProblemInstance parse_instance(std::istream& in);
ProblemInstance parse_instance_string(const std::string& text);
ProblemInstance read_instance_file(const std::string& path);

/// Canonical text; parse_instance(emit_instance(x)) == x.
std::string emit_instance(const ProblemInstance& instance);
void write_instance_file(const std::string& path, const ProblemInstance& instance);

/// What a solution file claims.
struct SolutionClaim {
  enum class Kind { Steiner, Dominating };
  Kind kind = Kind::Steiner;
  VertexSet vertices;  ///< 0-based
};

/// Either `steiner <v> ...` / `dominating <v> ...` (1-based, possibly
/// empty), or a JSON object with a `steiner_set` or `dominating_set` array
/// of 1-based ids (the solve command's output qualifies).
/// Throws ParseError.
SolutionClaim parse_solution(const std::string& text, const SplitGraph& graph);
SolutionClaim read_solution_file(const std::string& path, const SplitGraph& graph);

/// 1-based ids for output.
std::vector<int> to_file_ids(const VertexSet& vertices);

}  // namespace splitsteiner
