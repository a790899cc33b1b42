#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homset/bounds.hpp"
#include "homset/graph.hpp"

namespace homset {

// One named inequality check evaluated during extraction. On failure the
// extractor throws InvariantBreach with the same values; records for
// checks that passed stay in the trace for inspection.
struct AssertionRecord {
  std::string name;
  double observed = 0.0;
  double required = 0.0;
  bool pass = false;
};

// Structured account of one extraction run. Vertex sets use the indices
// of the input graph.
struct ExtractionTrace {
  CaseLabel case_used = CaseLabel::Trivial;
  std::vector<int> w_removed;  // low-degree vertices filtered out up front
  std::vector<std::pair<long long, long long>> clique_history;  // (iteration, |A|)
  std::vector<int> a_prime;    // A' of the last grouping round
  long long b_prime_size = 0;  // |B'| of the last grouping round
  long long es_calls = 0;      // recursion nodes across all split runs
  std::vector<AssertionRecord> assertions_checked;
};

// Recursive split: returns a clique of size exactly s or an independent
// set of size exactly t. Pivot is the lowest-index candidate; its
// neighborhood branch is taken whenever large enough (Pascal's identity
// guarantees one branch always is). Requires s, t >= 1 and
// |V(g)| >= es_upper_bound(s, t); throws PreconditionViolated otherwise.
// call_count, when given, accumulates the number of recursion nodes.
HomogeneousWitness es_extract(const Graph& g, int s, int t,
                              long long* call_count = nullptr);

// Peel the vertex of minimum degree-in-complement among the remaining
// candidates (ties to the lowest index), keep only its neighbors, repeat.
// By the Caro-Wei bound on the complement the result has size at least
// n / (average complement degree + 1).
std::vector<int> greedy_clique(const Graph& g);

// Low k: one direct split run with s = t = ceil(target). Requires k <= 100
// and the density bound.
std::pair<HomogeneousWitness, ExtractionTrace> extract_case1(
    const Graph& g, const TheoremParams& p);

// High k: the density bound beats the Turan edge cap for cliques of size
// ceil(2Ck) >= ceil(target), so a clique of the needed size exists; greedy
// finds it or an exact search with stop_at does. Requires k >= sqrt(n) and
// the density bound.
std::pair<HomogeneousWitness, ExtractionTrace> extract_case2(
    const Graph& g, const TheoremParams& p);

// For each vertex b outside the clique a with strictly more than
// (1 - 10/k)|a| neighbors in a, group b under its missing subset
// a \ N(b). Vertices at or below the threshold are dropped. Requires a to
// be a clique of h.
std::map<std::vector<int>, std::vector<int>> group_by_missing_subset(
    const Graph& h, std::span<const int> a, double k);

// Middle k: filter low-degree vertices, then grow a clique A until it
// reaches the target or a grouping round surrenders an independent set of
// size ceil(target). Each round either finishes or enlarges A by one via
// a clique found among the vertices adjacent to all of A \ A'. Requires
// 100 < k < sqrt(n) and the density bound. initial_clique (input-graph
// indices) seeds A and exists to force the loop to run in tests; it must
// survive the degree filter and be a clique.
std::pair<HomogeneousWitness, ExtractionTrace> extract_case3(
    const Graph& g, const TheoremParams& p,
    std::optional<std::vector<int>> initial_clique = std::nullopt);

// Dispatch on classify_case. Requires g.order() == p.n and
// edge_count >= (1 - 1/k) * n(n-1)/2; the returned witness always passes
// verify_witness.
std::pair<HomogeneousWitness, ExtractionTrace> extract(const Graph& g,
                                                       const TheoremParams& p);

}  // namespace homset
