#include "homset/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "homset/bounds.hpp"
#include "homset/oracle.hpp"

namespace homset {

namespace {

Graph graph_from_edge_indices(int n, const std::vector<std::uint64_t>& idx,
                              bool complemented) {
  std::vector<Bitset> rows(n, Bitset(n));
  if (complemented) {
    for (int v = 0; v < n; ++v) {
      rows[v] = Bitset::full(n);
      rows[v].reset(v);
    }
    for (std::uint64_t i : idx) {
      auto [u, v] = edge_from_index(n, (long long)i);
      rows[u].reset(v);
      rows[v].reset(u);
    }
  } else {
    for (std::uint64_t i : idx) {
      auto [u, v] = edge_from_index(n, (long long)i);
      rows[u].set(v);
      rows[v].set(u);
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace

Graph random_graph_exact_edges(int n, long long m, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  long long total = pair_count(n);
  if (m < 0 || m > total)
    throw InvalidInput("edge count " + std::to_string(m) +
                       " out of range [0, " + std::to_string(total) + "]");
  Rng rng(seed);
  bool complemented = 2 * m > total;
  long long q = complemented ? total - m : m;
  std::vector<std::uint64_t> idx =
      sample_distinct(rng, std::uint64_t(total), std::uint64_t(q));
  return graph_from_edge_indices(n, idx, complemented);
}

Graph turan_graph(int n, int r) {
  if (r < 1 || r > n)
    throw InvalidInput("part count must lie in [1, n], got " +
                       std::to_string(r));
  // First n mod r parts have size floor(n/r) + 1, the rest floor(n/r);
  // vertices are assigned to parts contiguously.
  std::vector<int> part(n);
  int q = n / r, extra = n % r, v = 0;
  for (int p = 0; p < r; ++p) {
    int size = q + (p < extra ? 1 : 0);
    for (int i = 0; i < size; ++i) part[v++] = p;
  }
  std::vector<Bitset> rows(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (part[u] != part[w]) rows[u].set(w);
  return Graph::from_rows(std::move(rows));
}

TwoColoring random_unbalanced_coloring(int n, double eps, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("coloring needs n >= 2");
  if (!(eps > 0.0) || eps > 0.5)
    throw InvalidInput("eps must satisfy 0 < eps <= 1/2");
  long long total = pair_count(n);
  // ceil with a nudge so an exactly-integer eps*total does not round up.
  long long minority = (long long)std::ceil(eps * double(total) - 1e-9) - 1;
  if (minority < 0) minority = 0;
  Rng rng(seed);
  std::vector<std::uint64_t> idx =
      sample_distinct(rng, std::uint64_t(total), std::uint64_t(minority));
  return TwoColoring::from_red_graph(graph_from_edge_indices(n, idx, false));
}

TwoColoring random_unbalanced_coloring(int n, Rational eps,
                                       std::uint64_t seed) {
  if (n < 2) throw InvalidInput("coloring needs n >= 2");
  if (eps.num <= 0 || eps.den <= 0 || 2 * eps.num > eps.den)
    throw InvalidInput("eps must satisfy 0 < eps <= 1/2");
  long long total = pair_count(n);
  BigInt ceil_val = (BigInt(eps.num) * total + eps.den - 1) / eps.den;
  long long minority = ceil_val.convert_to<long long>() - 1;
  if (minority < 0) minority = 0;
  Rng rng(seed);
  std::vector<std::uint64_t> idx =
      sample_distinct(rng, std::uint64_t(total), std::uint64_t(minority));
  return TwoColoring::from_red_graph(graph_from_edge_indices(n, idx, false));
}

TightnessResult tightness_search(const Graph& start, long long min_edges,
                                 int iterations, std::uint64_t seed) {
  if (start.edge_count() < min_edges)
    throw PreconditionViolated("start graph already violates the edge floor");

  auto hom = [](const Graph& g) {
    return std::max(max_clique_exact(g).best_size,
                    max_independent_set_exact(g).best_size);
  };

  int n = start.order();
  long long total = pair_count(n);
  Graph current = start;
  int current_hom = hom(current);
  TightnessResult best{current, current_hom};

  Rng rng(seed);
  auto pick_pair = [&](bool want_edge) -> std::pair<int, int> {
    // Uniform over edges or non-edges by index among that class.
    long long count = want_edge ? current.edge_count()
                                : total - current.edge_count();
    long long skip = (long long)rng.below(std::uint64_t(count));
    for (long long i = 0; i < total; ++i) {
      auto [u, v] = edge_from_index(n, i);
      if (current.adjacent(u, v) == want_edge && skip-- == 0) return {u, v};
    }
    throw InvariantBreach("tightness_pick_pair", 0, double(count));
  };

  int stale = 0;
  for (int it = 0; it < iterations && stale < 50; ++it) {
    ++stale;
    long long edges = current.edge_count();
    int move = (int)rng.below(3);  // 0 insert, 1 delete, 2 swap
    bool can_insert = edges < total;
    bool can_delete = edges > min_edges;
    bool can_swap = edges > 0 && edges < total;
    if ((move == 0 && !can_insert) || (move == 1 && !can_delete) ||
        (move == 2 && !can_swap))
      continue;  // illegal move, a wasted (non-improving) iteration

    std::vector<Bitset> rows;
    rows.reserve(n);
    for (int v = 0; v < n; ++v) rows.push_back(current.neighbors(v));
    if (move == 0 || move == 2) {
      auto [u, v] = pick_pair(false);
      rows[u].set(v);
      rows[v].set(u);
    }
    if (move == 1 || move == 2) {
      auto [u, v] = pick_pair(true);
      rows[u].reset(v);
      rows[v].reset(u);
    }
    Graph candidate = Graph::from_rows(std::move(rows));
    int candidate_hom = hom(candidate);
    if (candidate_hom > current_hom) continue;  // reject worsening move
    if (candidate_hom < current_hom) stale = 0;
    current = std::move(candidate);
    current_hom = candidate_hom;
    if (current_hom < best.best_hom) best = {current, current_hom};
  }
  return best;
}

std::variant<Graph, TwoColoring> generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::RandomExact:
      return random_graph_exact_edges(spec.n, spec.m, spec.seed);
    case GenKind::TuranGraph:
      return turan_graph(spec.n, spec.r);
    case GenKind::UnbalancedColoring:
      return random_unbalanced_coloring(spec.n, spec.eps, spec.seed);
    default: {
      Graph start = random_graph_exact_edges(spec.n, spec.m, spec.seed);
      return tightness_search(start, spec.m, spec.iterations,
                              mix_seed(spec.seed, 1)).graph;
    }
  }
}

}  // namespace homset
