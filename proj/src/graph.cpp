#include "homset/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "homset/bounds.hpp"

namespace homset {

namespace {

long long count_edges(const std::vector<Bitset>& rows) {
  long long twice = 0;
  for (const auto& r : rows) twice += r.count();
  return twice / 2;
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw InvalidInput("graph order must be non-negative");
  std::vector<Bitset> rows(n, Bitset(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidInput("edge endpoint out of range: (" + std::to_string(u) +
                         "," + std::to_string(v) + ") with n=" +
                         std::to_string(n));
    if (u == v)
      throw InvalidInput("self-loop at vertex " + std::to_string(u));
    rows[u].set(v);
    rows[v].set(u);
  }
  long long m = count_edges(rows);
  return Graph(n, std::move(rows), m);
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  int n = (int)rows.size();
  for (int u = 0; u < n; ++u) {
    if (rows[u].universe() != n)
      throw InvalidInput("row width does not match vertex count");
    if (rows[u].test(u))
      throw InvalidInput("self-loop at vertex " + std::to_string(u));
  }
  for (int u = 0; u < n; ++u)
    rows[u].for_each([&](int v) {
      if (!rows[v].test(u))
        throw InvalidInput("asymmetric adjacency at (" + std::to_string(u) +
                           "," + std::to_string(v) + ")");
    });
  long long m = count_edges(rows);
  return Graph(n, std::move(rows), m);
}

Graph Graph::complete(int n) {
  if (n < 0) throw InvalidInput("graph order must be non-negative");
  std::vector<Bitset> rows(n, Bitset(n));
  for (int v = 0; v < n; ++v) {
    rows[v] = Bitset::full(n);
    rows[v].reset(v);
  }
  return Graph(n, std::move(rows), (long long)n * (n - 1) / 2);
}

Graph Graph::empty_graph(int n) {
  if (n < 0) throw InvalidInput("graph order must be non-negative");
  return Graph(n, std::vector<Bitset>(n, Bitset(n)), 0);
}

Graph Graph::complement() const {
  std::vector<Bitset> rows(n_, Bitset(n_));
  for (int v = 0; v < n_; ++v) {
    rows[v] = Bitset::full(n_);
    rows[v] -= rows_[v];
    rows[v].reset(v);
  }
  long long m = (long long)n_ * (n_ - 1) / 2 - edge_count_;
  return Graph(n_, std::move(rows), m);
}

std::pair<Graph, std::vector<int>> Graph::induced_subgraph(
    std::span<const int> s) const {
  std::vector<int> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= n_)
      throw InvalidInput("induced_subgraph: vertex " + std::to_string(v) +
                         " out of range");
  int k = (int)verts.size();
  std::vector<Bitset> rows(k, Bitset(k));
  long long twice = 0;
  for (int i = 0; i < k; ++i) {
    const Bitset& big = rows_[verts[i]];
    for (int j = 0; j < k; ++j)
      if (big.test(verts[j])) {
        rows[i].set(j);
        ++twice;
      }
  }
  return {Graph(k, std::move(rows), twice / 2), std::move(verts)};
}

Homogeneity check_homogeneous(const Graph& g, std::span<const int> s) {
  std::vector<int> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= g.order())
      throw InvalidInput("check_homogeneous: vertex " + std::to_string(v) +
                         " out of range");
  if (verts.size() <= 1) return Homogeneity::Both;

  Bitset members(g.order());
  for (int v : verts) members.set(v);

  bool clique = true, indep = true;
  for (int v : verts) {
    int inside = Bitset::and_count(g.neighbors(v), members);
    if (inside != (int)verts.size() - 1) clique = false;
    if (inside != 0) indep = false;
    if (!clique && !indep) return Homogeneity::Neither;
  }
  if (clique) return Homogeneity::Clique;
  return Homogeneity::IndependentSet;
}

std::pair<Graph, double> majority_graph(const TwoColoring& c) {
  if (c.order() < 2) throw InvalidInput("majority_graph needs n >= 2");
  long long red = c.red_count();
  long long blue = c.blue_count();
  long long minority = std::min(red, blue);
  double fraction = double(minority) / double(c.total_edges());
  if (red >= blue) return {c.red_graph(), fraction};
  return {c.blue_graph(), fraction};
}

bool is_eps_balanced(const TwoColoring& c, Rational eps) {
  if (eps.num <= 0 || eps.den <= 0 || 2 * eps.num > eps.den)
    throw InvalidInput("eps must satisfy 0 < eps <= 1/2");
  // count >= (p/q) * M  <=>  count * q >= p * M, exactly.
  using boost::multiprecision::cpp_int;
  cpp_int m = c.total_edges();
  cpp_int lhs_red = cpp_int(c.red_count()) * eps.den;
  cpp_int lhs_blue = cpp_int(c.blue_count()) * eps.den;
  cpp_int rhs = cpp_int(eps.num) * m;
  return lhs_red >= rhs && lhs_blue >= rhs;
}

bool is_eps_balanced(const TwoColoring& c, double eps) {
  if (!(eps > 0.0) || eps > 0.5)
    throw InvalidInput("eps must satisfy 0 < eps <= 1/2");
  double m = double(c.total_edges());
  double red = double(c.red_count()) / m;
  double blue = double(c.blue_count()) / m;
  return red + kBalanceTol >= eps && blue + kBalanceTol >= eps;
}

bool verify_witness(const Graph& g, const HomogeneousWitness& w,
                    const TheoremParams& p) {
  TheoremParams checked = validate_params(p.n, p.k, p.C);
  Homogeneity h = check_homogeneous(g, w.vertices);
  bool kind_ok =
      h == Homogeneity::Both ||
      (w.kind == WitnessKind::Clique && h == Homogeneity::Clique) ||
      (w.kind == WitnessKind::IndependentSet &&
       h == Homogeneity::IndependentSet);
  if (!kind_ok) return false;
  return double(w.vertices.size()) >= target_size(checked) - kSizeTol;
}

long long pair_count(int n) { return (long long)n * (n - 1) / 2; }

long long edge_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  // offset of row u, then position of v within the row
  return (long long)u * n - (long long)u * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> edge_from_index(int n, long long idx) {
  // binary search on the row offsets, which increase monotonically
  int lo = 0, hi = n - 1;
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    long long off = (long long)mid * n - (long long)mid * (mid + 1) / 2;
    if (off <= idx)
      lo = mid;
    else
      hi = mid - 1;
  }
  long long off = (long long)lo * n - (long long)lo * (lo + 1) / 2;
  int v = int(idx - off) + lo + 1;
  return {lo, v};
}

TwoColoring TwoColoring::from_red_edges(
    int n, std::span<const std::pair<int, int>> red) {
  return TwoColoring(Graph::from_edges(n, red));
}

TwoColoring TwoColoring::from_red_graph(Graph red) {
  return TwoColoring(std::move(red));
}

}  // namespace homset
