#pragma once

#include <cstdint>
#include <variant>

#include "homset/graph.hpp"
#include "homset/rng.hpp"

namespace homset {

// Uniformly random graph with exactly m edges. Above half density the
// complement's non-edges are sampled instead, so near-complete graphs
// (the interesting regime here) cost O(n^2/64 + (M - m)) rather than
// O(m) draws.
Graph random_graph_exact_edges(int n, long long m, std::uint64_t seed);

// Complete r-partite graph with part sizes as equal as possible (the
// first n mod r parts get the extra vertex). Clique number exactly r.
Graph turan_graph(int n, int r);

// Coloring whose minority (red) class has exactly
// max(0, ceil(eps * n(n-1)/2) - 1) edges, chosen uniformly; the output
// always fails is_eps_balanced at this eps. The Rational overload
// computes the ceiling in exact integer arithmetic.
TwoColoring random_unbalanced_coloring(int n, double eps, std::uint64_t seed);
TwoColoring random_unbalanced_coloring(int n, Rational eps,
                                       std::uint64_t seed);

struct TightnessResult {
  Graph graph;
  int best_hom = 0;  // max(clique number, independence number)
};

// Hill-climbing probe for how small max(clique, IS) can get at a given
// density: random single-edge insert/delete/swap moves that keep
// edge_count >= min_edges, accepting any non-worsening move; gives up
// after 50 consecutive iterations without strict improvement. The start
// graph is evaluated even with zero iterations, so best_hom never
// exceeds hom(start). Oracle-backed: keep n at desk scale (<= 40 or so).
TightnessResult tightness_search(const Graph& start, long long min_edges,
                                 int iterations, std::uint64_t seed);

enum class GenKind { RandomExact, TuranGraph, UnbalancedColoring,
                     TightnessSearch };

// One reproducible instance recipe: (spec -> output) is a pure function.
// m doubles as the edge floor for TightnessSearch (start = random graph
// with exactly m edges, min_edges = m); r is only read for TuranGraph,
// eps only for UnbalancedColoring, iterations only for TightnessSearch.
struct GenSpec {
  GenKind kind = GenKind::RandomExact;
  int n = 0;
  long long m = 0;
  int r = 0;
  double eps = 0.0;
  int iterations = 0;
  std::uint64_t seed = 0;
};

std::variant<Graph, TwoColoring> generate(const GenSpec& spec);

}  // namespace homset
