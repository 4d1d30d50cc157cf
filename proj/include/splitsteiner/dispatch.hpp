#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "splitsteiner/instance.hpp"

namespace splitsteiner {

enum class Method {
  Auto,
  Path,
  TreeK,
  Triad,
  CircularI,
  CircularK,
  StarBounded,
  CombXp,
  Fpt,
  KernelFpt,
  Approx,
  Oracle
};

std::string_view to_string(Method method);
/// Throws InvalidParameter for unknown names.
Method parse_method(std::string_view name);

struct SolveOptions {
  int oracle_cap = 20;
  std::optional<int> degree_bound;  ///< star-bounded only
  bool verify = true;
};

struct SolveResult {
  SteinerSolution solution;  ///< original ids
  Method requested = Method::Auto;
  bool exact = true;         ///< false for approx
  std::optional<bool> verified;
  /// |S| <= budget; nullopt without a budget. An inexact method that misses
  /// the budget proves nothing, which `answer()` reports as "unknown".
  std::optional<bool> within_budget;
  std::vector<Edge> witness;  ///< spanning tree of G[S ∪ R]
  double millis = 0.0;

  /// "yes", "no", "unknown", or "" without a budget.
  std::string answer() const;
  /// 0 yes or no budget, 1 no / unknown.
  int exit_code() const;
};

/// Explicit methods check their own preconditions and throw
/// StructureMismatch; `auto` picks by the declared structure and falls back
/// to fpt with a warning when no structured solver applies. Arbitrary
/// terminals are normalized to the R = I case first (not for oracle or
/// approx, which take R as given).
SolveResult solve(const ProblemInstance& instance, Method method, const SolveOptions& options = {});

/// The method `auto` would run on this (already normalized) instance, plus a
/// reason when it had to fall back.
std::pair<Method, std::string> auto_method(const ProblemInstance& instance);

/// Structured result document with a stable key order.
nlohmann::ordered_json result_json(const ProblemInstance& instance, const SolveResult& result,
                                   bool with_timing = true);

}  // namespace splitsteiner
