#pragma once

#include <optional>
#include <vector>

#include "homset/graph.hpp"

namespace homset {

struct OracleResult {
  int best_size = 0;
  std::vector<int> witness;   // sorted vertex indices
  bool exhausted = false;     // true iff the search proved optimality
  long long nodes_explored = 0;
};

struct OracleOptions {
  std::optional<int> stop_at;  // return early once a set this large is found
  double budget_secs = 30.0;   // wall-clock budget per call
};

// Branch-and-bound maximum clique with bitset candidate sets and greedy
// coloring bounds; vertices explored in descending-degree order, ties by
// index. Exceeding the budget throws BudgetExceeded carrying the best
// solution found so far.
OracleResult max_clique_exact(const Graph& g, OracleOptions opts = {});

// max_clique_exact on the complement; the witness is identical.
OracleResult max_independent_set_exact(const Graph& g, OracleOptions opts = {});

struct RamseyResult {
  bool holds = false;
  std::optional<Graph> counterexample;
};

// Exhaustively decides whether every n-vertex graph contains a clique of
// size s or an independent set of size t, enumerating all 2^(n(n-1)/2)
// graphs in ascending edge-mask order; the counterexample, when one
// exists, is the first graph in that order with neither. Instances with
// n(n-1)/2 > max_edge_bits throw BudgetExceeded.
RamseyResult ramsey_check(int n, int s, int t, int max_edge_bits = 21);

}  // namespace homset
