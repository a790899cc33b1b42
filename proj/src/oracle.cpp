#include "homset/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

namespace homset {

namespace {

using Clock = std::chrono::steady_clock;

struct CliqueSearch {
  CliqueSearch(const std::vector<Bitset>& a, Clock::time_point d, int s)
      : adj(a), deadline(d), stop_at(s) {}

  const std::vector<Bitset>& adj;  // permuted adjacency
  Clock::time_point deadline;
  int stop_at;  // 0 when absent
  long long nodes = 0;
  int best_size = 0;
  std::vector<int> best;  // permuted indices
  std::vector<int> current;
  bool done = false;

  void record_if_better() {
    if ((int)current.size() > best_size) {
      best_size = (int)current.size();
      best = current;
      if (stop_at > 0 && best_size >= stop_at) done = true;
    }
  }

  void expand(const Bitset& cand) {
    ++nodes;
    if ((nodes & 1023) == 0 && Clock::now() > deadline)
      throw BudgetExceeded("clique search budget exhausted", best_size, best,
                           nodes);
    if (cand.none()) {
      record_if_better();
      return;
    }

    // Greedy coloring of the candidates; a vertex with color c caps any
    // clique through it at |current| + c.
    std::vector<int> order, color;
    order.reserve(64);
    color.reserve(64);
    Bitset uncolored = cand;
    int c = 0;
    while (uncolored.any()) {
      ++c;
      Bitset avail = uncolored;
      while (avail.any()) {
        int v = avail.find_first();
        avail.reset(v);
        avail -= adj[v];
        uncolored.reset(v);
        order.push_back(v);
        color.push_back(c);
      }
    }

    Bitset remaining = cand;
    for (int i = (int)order.size() - 1; i >= 0; --i) {
      if ((int)current.size() + color[i] <= best_size) return;  // colors ascend
      int v = order[i];
      current.push_back(v);
      Bitset next = remaining & adj[v];
      if (next.any())
        expand(next);
      else
        record_if_better();
      current.pop_back();
      if (done) return;
      remaining.reset(v);
    }
  }
};

}  // namespace

OracleResult max_clique_exact(const Graph& g, OracleOptions opts) {
  int n = g.order();
  if (n == 0) return OracleResult{0, {}, true, 1};

  // Permute so index order = descending degree (ties by original index).
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<Bitset> adj(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(perm[i], perm[j])) adj[i].set(j);

  if (opts.stop_at && *opts.stop_at <= 0) return OracleResult{0, {}, false, 0};
  CliqueSearch search(adj,
                      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(
                                             opts.budget_secs)),
                      opts.stop_at.value_or(0));
  try {
    search.expand(Bitset::full(n));
  } catch (BudgetExceeded& e) {
    std::vector<int> w;
    w.reserve(e.best_witness.size());
    for (int v : e.best_witness) w.push_back(perm[v]);
    std::sort(w.begin(), w.end());
    throw BudgetExceeded(e.what(), e.best_size, std::move(w),
                         e.nodes_explored);
  }

  OracleResult r;
  r.best_size = search.best_size;
  for (int v : search.best) r.witness.push_back(perm[v]);
  std::sort(r.witness.begin(), r.witness.end());
  r.exhausted = !search.done;
  r.nodes_explored = search.nodes;
  return r;
}

OracleResult max_independent_set_exact(const Graph& g, OracleOptions opts) {
  return max_clique_exact(g.complement(), opts);
}

RamseyResult ramsey_check(int n, int s, int t, int max_edge_bits) {
  if (n < 0 || s < 1 || t < 1)
    throw InvalidInput("ramsey_check needs n >= 0, s >= 1, t >= 1");
  long long bits = pair_count(n);
  if (bits > max_edge_bits)
    throw BudgetExceeded("ramsey_check: " + std::to_string(bits) +
                         " edge slots exceed the exhaustive budget of " +
                         std::to_string(max_edge_bits));

  // Edge masks of the candidate vertex subsets: a graph mask contains a
  // clique on S iff it covers S's mask, an independent set on S iff it
  // misses it entirely.
  auto subset_masks = [&](int size) {
    std::vector<std::uint32_t> masks;
    if (size > n) return masks;
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t m = 0;
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
          m |= std::uint32_t(1) << edge_index(n, pick[i], pick[j]);
      masks.push_back(m);
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    return masks;
  };
  std::vector<std::uint32_t> clique_masks = subset_masks(s);
  std::vector<std::uint32_t> is_masks = subset_masks(t);

  std::uint64_t total = std::uint64_t(1) << bits;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = false;
    for (std::uint32_t cm : clique_masks)
      if ((mask & cm) == cm) {
        ok = true;
        break;
      }
    if (!ok)
      for (std::uint32_t im : is_masks)
        if ((mask & im) == 0) {
          ok = true;
          break;
        }
    if (!ok) {
      std::vector<std::pair<int, int>> edges;
      for (int b = 0; b < (int)bits; ++b)
        if (mask >> b & 1) edges.push_back(edge_from_index(n, b));
      return RamseyResult{false, Graph::from_edges(n, edges)};
    }
  }
  return RamseyResult{true, std::nullopt};
}

}  // namespace homset
