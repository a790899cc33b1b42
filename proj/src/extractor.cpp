#include "homset/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "homset/oracle.hpp"

namespace homset {

namespace {

// Edge counts reach ~2*10^8, where a double holding (1-1/k)*M carries
// absolute rounding error around 1e-8; this slack is far below one edge
// but safely above that noise.
constexpr double kEdgeSlack = 1e-6;

void require_density(const Graph& g, const TheoremParams& p) {
  if (g.order() != p.n)
    throw InvalidInput("graph has " + std::to_string(g.order()) +
                       " vertices but params say n = " + std::to_string(p.n));
  double required = (1.0 - 1.0 / p.k) * double(pair_count(p.n));
  if (double(g.edge_count()) < required - kEdgeSlack)
    throw PreconditionViolated(
        "edge count " + std::to_string(g.edge_count()) +
        " is below the density bound " + std::to_string(required));
}

// Evaluates one named inequality, records it, and refuses to continue on
// failure: under the preconditions these cannot fail, so a failure means
// corrupted input or a bug, never a legitimate outcome.
void check(ExtractionTrace& tr, const std::string& name, double observed,
           double required, bool pass) {
  tr.assertions_checked.push_back({name, observed, required, pass});
  if (!pass) throw InvariantBreach(name, observed, required);
}

int ceil_with_slack(double x) {
  return (int)std::ceil(x - kSizeTol);
}

struct SplitResult {
  WitnessKind kind;
  std::vector<int> verts;
};

// The inductive step behind the binomial Ramsey bound, run as a
// recursion: pivot v, then either its neighborhood is big enough to yield
// an (s-1, t) instance or its non-neighborhood an (s, t-1) one.
SplitResult es_split(const Graph& g, const Bitset& cand, int s, int t,
                     long long& calls) {
  ++calls;
  if (s == 1) return {WitnessKind::Clique, {cand.find_first()}};
  if (t == 1) return {WitnessKind::IndependentSet, {cand.find_first()}};

  int v = cand.find_first();
  Bitset nbrs = cand & g.neighbors(v);
  Bitset rest = cand - g.neighbors(v);
  rest.reset(v);

  if (BigInt(nbrs.count()) >= es_upper_bound(s - 1, t)) {
    SplitResult sub = es_split(g, nbrs, s - 1, t, calls);
    if (sub.kind == WitnessKind::Clique) sub.verts.push_back(v);
    return sub;
  }
  BigInt need = es_upper_bound(s, t - 1);
  if (BigInt(rest.count()) < need)
    throw InvariantBreach("es_split_pascal", double(rest.count()),
                          need.convert_to<double>());
  SplitResult sub = es_split(g, rest, s, t - 1, calls);
  if (sub.kind == WitnessKind::IndependentSet) sub.verts.push_back(v);
  return sub;
}

SplitResult es_run(const Graph& g, const Bitset& cand, int s, int t,
                   long long& calls) {
  SplitResult r = es_split(g, cand, s, t, calls);
  std::sort(r.verts.begin(), r.verts.end());
  return r;
}

}  // namespace

HomogeneousWitness es_extract(const Graph& g, int s, int t,
                              long long* call_count) {
  if (s < 1 || t < 1)
    throw PreconditionViolated("es_extract needs s >= 1 and t >= 1");
  BigInt need = es_upper_bound(s, t);
  if (BigInt(g.order()) < need)
    throw PreconditionViolated(
        "es_extract needs at least " + need.str() + " vertices for (s,t) = (" +
        std::to_string(s) + "," + std::to_string(t) + "), got " +
        std::to_string(g.order()));
  long long calls = 0;
  SplitResult r = es_run(g, Bitset::full(g.order()), s, t, calls);
  if (call_count) *call_count += calls;
  return HomogeneousWitness{r.kind, std::move(r.verts), CaseLabel::Trivial};
}

std::vector<int> greedy_clique(const Graph& g) {
  if (g.order() < 1)
    throw InvalidInput("greedy_clique needs at least one vertex");
  Bitset cand = Bitset::full(g.order());
  std::vector<int> clique;
  while (cand.any()) {
    // Min degree-in-complement within cand = max degree-within-cand.
    int best = -1, best_deg = -1;
    cand.for_each([&](int v) {
      int d = Bitset::and_count(g.neighbors(v), cand);
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    });
    clique.push_back(best);
    cand &= g.neighbors(best);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::pair<HomogeneousWitness, ExtractionTrace> extract_case1(
    const Graph& g, const TheoremParams& p0) {
  TheoremParams p = validate_params(p0.n, p0.k, p0.C);
  if (p.k > 100.0)
    throw PreconditionViolated("this path needs k <= 100, got " +
                               std::to_string(p.k));
  require_density(g, p);

  ExtractionTrace tr;
  tr.case_used = CaseLabel::Case1;
  double target = target_size(p);
  int s = std::max(1, ceil_with_slack(target));

  // 4^target < n for k <= 100, so the binomial bound fits inside g.
  BigInt need = es_upper_bound(s, s);
  check(tr, "case1_es_le_n", double(p.n), need.convert_to<double>(),
        BigInt(p.n) >= need);

  HomogeneousWitness w = es_extract(g, s, s, &tr.es_calls);
  w.case_used = CaseLabel::Case1;
  return {std::move(w), std::move(tr)};
}

std::pair<HomogeneousWitness, ExtractionTrace> extract_case2(
    const Graph& g, const TheoremParams& p0) {
  TheoremParams p = validate_params(p0.n, p0.k, p0.C);
  if (p.k < std::sqrt(double(p.n)))
    throw PreconditionViolated("this path needs k >= sqrt(n), got k = " +
                               std::to_string(p.k));
  require_density(g, p);

  ExtractionTrace tr;
  tr.case_used = CaseLabel::Case2;
  double target = target_size(p);
  int m = std::max(1, ceil_with_slack(target));

  check(tr, "case2_target_le_2ck", target, 2.0 * p.C * p.k,
        target <= 2.0 * p.C * p.k + kSizeTol);

  // Density beats the Turan cap for ceil(2Ck)-cliques, so one exists.
  // (ceil(2Ck) < 2 only happens when m = 1, where any vertex suffices.)
  int r = std::max(1, ceil_with_slack(2.0 * p.C * p.k));
  if (r >= 2) {
    double cap = turan_max_edges(p.n, r);
    check(tr, "case2_turan_excess", double(g.edge_count()), cap,
          double(g.edge_count()) > cap);
  }

  HomogeneousWitness w;
  w.kind = WitnessKind::Clique;
  w.case_used = CaseLabel::Case2;
  std::vector<int> greedy = greedy_clique(g);
  if ((int)greedy.size() >= m) {
    w.vertices = std::move(greedy);
    return {std::move(w), std::move(tr)};
  }
  OracleResult res = max_clique_exact(g, OracleOptions{m, 30.0});
  if (res.best_size < m)
    throw InvariantBreach("case2_clique_exists", double(res.best_size),
                          double(m));
  w.vertices = std::move(res.witness);
  return {std::move(w), std::move(tr)};
}

std::map<std::vector<int>, std::vector<int>> group_by_missing_subset(
    const Graph& h, std::span<const int> a, double k) {
  Homogeneity hom = check_homogeneous(h, a);
  if (hom != Homogeneity::Clique && hom != Homogeneity::Both)
    throw PreconditionViolated("group_by_missing_subset: a is not a clique");

  Bitset in_a(h.order());
  for (int v : a) in_a.set(v);
  std::vector<int> a_sorted(a.begin(), a.end());
  std::sort(a_sorted.begin(), a_sorted.end());
  a_sorted.erase(std::unique(a_sorted.begin(), a_sorted.end()),
                 a_sorted.end());

  double threshold = (1.0 - 10.0 / k) * double(a_sorted.size());
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int b = 0; b < h.order(); ++b) {
    if (in_a.test(b)) continue;
    int deg_in_a = Bitset::and_count(h.neighbors(b), in_a);
    if (!(double(deg_in_a) > threshold + kSizeTol)) continue;
    std::vector<int> key;
    for (int v : a_sorted)
      if (!h.adjacent(b, v)) key.push_back(v);
    groups[key].push_back(b);
  }
  return groups;
}

std::pair<HomogeneousWitness, ExtractionTrace> extract_case3(
    const Graph& g, const TheoremParams& p0,
    std::optional<std::vector<int>> initial_clique) {
  TheoremParams p = validate_params(p0.n, p0.k, p0.C);
  if (!(p.k > 100.0) || !(p.k < std::sqrt(double(p.n))))
    throw PreconditionViolated("this path needs 100 < k < sqrt(n), got k = " +
                               std::to_string(p.k));
  require_density(g, p);

  ExtractionTrace tr;
  tr.case_used = CaseLabel::Case3;
  int n = p.n;
  double target = target_size(p);
  int t0 = std::max(1, ceil_with_slack(target));

  // Drop every vertex of degree below (1-2/k)n; the density bound caps
  // the removals at n/2.
  double degree_threshold = (1.0 - 2.0 / p.k) * double(n);
  std::vector<int> keep;
  keep.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (double(g.degree(v)) < degree_threshold - kSizeTol)
      tr.w_removed.push_back(v);
    else
      keep.push_back(v);
  }
  check(tr, "w_le_half", double(tr.w_removed.size()), double(n) / 2.0,
        double(tr.w_removed.size()) <= double(n) / 2.0 + kSizeTol);

  Graph h;
  std::vector<int> to_g;  // h index -> g index
  if ((int)keep.size() == n) {
    h = g;
    to_g.resize(n);
    std::iota(to_g.begin(), to_g.end(), 0);
  } else {
    std::tie(h, to_g) = g.induced_subgraph(keep);
  }
  std::vector<int> from_g(n, -1);
  for (int i = 0; i < h.order(); ++i) from_g[to_g[i]] = i;

  auto map_to_g = [&](const std::vector<int>& local) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(to_g[v]);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<int> a;  // h indices, kept sorted
  if (initial_clique) {
    for (int v : *initial_clique) {
      if (v < 0 || v >= n)
        throw InvalidInput("initial clique vertex " + std::to_string(v) +
                           " out of range");
      if (from_g[v] < 0)
        throw PreconditionViolated("initial clique vertex " +
                                   std::to_string(v) +
                                   " was removed by the degree filter");
      a.push_back(from_g[v]);
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty()) throw PreconditionViolated("initial clique is empty");
    Homogeneity hom = check_homogeneous(h, a);
    if (hom != Homogeneity::Clique && hom != Homogeneity::Both)
      throw PreconditionViolated("initial clique is not a clique");
  } else {
    a = greedy_clique(h);
  }

  long long iteration = 0;
  tr.clique_history.emplace_back(iteration, (long long)a.size());

  while (double(a.size()) < target - kSizeTol) {
    ++iteration;
    auto groups = group_by_missing_subset(h, a, p.k);
    long long qualifying = 0;
    for (const auto& [key, members] : groups)
      qualifying += (long long)members.size();
    check(tr, "qualifying_ge_quarter", double(qualifying), double(n) / 4.0,
          double(qualifying) >= double(n) / 4.0 - kSizeTol);

    // Largest group; ties go to the lexicographically smallest key, which
    // is the map's iteration order.
    const std::vector<int>* a_prime = nullptr;
    const std::vector<int>* b_prime = nullptr;
    for (const auto& [key, members] : groups) {
      if (!b_prime || members.size() > b_prime->size()) {
        a_prime = &key;
        b_prime = &members;
      }
    }

    check(tr, "bprime_ge_sqrt", double(b_prime->size()),
          std::sqrt(double(n)),
          double(b_prime->size()) >= std::sqrt(double(n)) - kSizeTol);

    int s0 = (int)a_prime->size() + 1;
    BigInt need = es_upper_bound(s0, t0);
    check(tr, "bprime_ge_es_bound", double(b_prime->size()),
          need.convert_to<double>(), BigInt(b_prime->size()) >= need);

    tr.a_prime = map_to_g(*a_prime);
    tr.b_prime_size = (long long)b_prime->size();

    Bitset cand(h.order());
    for (int v : *b_prime) cand.set(v);
    SplitResult sub = es_run(h, cand, s0, t0, tr.es_calls);

    if (sub.kind == WitnessKind::IndependentSet) {
      HomogeneousWitness w;
      w.kind = WitnessKind::IndependentSet;
      w.case_used = CaseLabel::Case3;
      w.vertices = map_to_g(sub.verts);
      return {std::move(w), std::move(tr)};
    }

    // Q lives in B', whose members are adjacent to everything in A \ A',
    // so swapping A' for Q grows the clique by one.
    std::vector<int> merged;
    std::set_difference(a.begin(), a.end(), a_prime->begin(), a_prime->end(),
                        std::back_inserter(merged));
    merged.insert(merged.end(), sub.verts.begin(), sub.verts.end());
    std::sort(merged.begin(), merged.end());

    Homogeneity hom = check_homogeneous(h, merged);
    check(tr, "merge_is_clique", double(merged.size()), double(a.size() + 1),
          (hom == Homogeneity::Clique || hom == Homogeneity::Both) &&
              merged.size() == a.size() + 1);
    a = std::move(merged);
    tr.clique_history.emplace_back(iteration, (long long)a.size());
  }

  HomogeneousWitness w;
  w.kind = WitnessKind::Clique;
  w.case_used = CaseLabel::Case3;
  w.vertices = map_to_g(a);
  return {std::move(w), std::move(tr)};
}

std::pair<HomogeneousWitness, ExtractionTrace> extract(
    const Graph& g, const TheoremParams& p0) {
  TheoremParams p = validate_params(p0.n, p0.k, p0.C);
  require_density(g, p);

  std::pair<HomogeneousWitness, ExtractionTrace> result;
  switch (classify_case(p)) {
    case CaseLabel::Case1:
      result = extract_case1(g, p);
      break;
    case CaseLabel::Case2:
      result = extract_case2(g, p);
      break;
    default:
      result = extract_case3(g, p, std::nullopt);
      break;
  }
  if (!verify_witness(g, result.first, p))
    throw InvariantBreach("witness_verifies",
                          double(result.first.vertices.size()),
                          target_size(p));
  return result;
}

}  // namespace homset
