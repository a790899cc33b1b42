#pragma once

#include <span>
#include <utility>
#include <vector>

#include "homset/bitset.hpp"
#include "homset/types.hpp"

namespace homset {

// Immutable undirected simple graph. Adjacency is stored as n bit-rows of
// width n so degree and common-neighborhood queries run word-parallel;
// Case-3 extractions need n around 2*10^4.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse; endpoints out of [0,n) or self-loops throw.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                              edges.end()));
  }

  // Takes ownership of prebuilt rows; validates symmetry and an empty
  // diagonal, and counts edges. This is the cheap path for dense builds.
  static Graph from_rows(std::vector<Bitset> rows);

  static Graph complete(int n);
  static Graph empty_graph(int n);

  int order() const { return n_; }
  long long edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const Bitset& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }

  Graph complement() const;

  // Subgraph induced by the vertex set s (deduplicated). Second element
  // maps local indices back to indices of this graph, ascending.
  std::pair<Graph, std::vector<int>> induced_subgraph(
      std::span<const int> s) const;

  bool operator==(const Graph&) const = default;

 private:
  Graph(int n, std::vector<Bitset> rows, long long m)
      : n_(n), edge_count_(m), rows_(std::move(rows)) {}

  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<Bitset> rows_;
};

// Red/blue edge-coloring of K_n, represented by its red edge set.
class TwoColoring {
 public:
  TwoColoring() = default;

  static TwoColoring from_red_edges(int n,
                                    std::span<const std::pair<int, int>> red);
  static TwoColoring from_red_edges(
      int n, std::initializer_list<std::pair<int, int>> red) {
    return from_red_edges(
        n, std::span<const std::pair<int, int>>(red.begin(), red.end()));
  }
  static TwoColoring from_red_graph(Graph red);

  int order() const { return red_.order(); }
  long long total_edges() const {
    return (long long)order() * (order() - 1) / 2;
  }
  long long red_count() const { return red_.edge_count(); }
  long long blue_count() const { return total_edges() - red_count(); }
  const Graph& red_graph() const { return red_; }
  Graph blue_graph() const { return red_.complement(); }

 private:
  explicit TwoColoring(Graph red) : red_(std::move(red)) {}
  Graph red_;
};

enum class Homogeneity { Clique, IndependentSet, Both, Neither };

// Clique iff all pairs of s are adjacent, IndependentSet iff none are,
// Both iff |s| <= 1 after deduplication.
Homogeneity check_homogeneous(const Graph& g, std::span<const int> s);

// Graph of the color class with more edges (ties go to red) and the
// fraction of K_n edges carried by the minority color.
std::pair<Graph, double> majority_graph(const TwoColoring& c);

// True iff both color classes carry at least an eps-fraction of the edges.
// The Rational overload compares exactly by cross-multiplication; the
// double overload allows kBalanceTol of slack on the fraction.
bool is_eps_balanced(const TwoColoring& c, Rational eps);
bool is_eps_balanced(const TwoColoring& c, double eps);

// True iff check_homogeneous confirms w.kind and |w.vertices| reaches the
// size target Ck*log2(n)/log2(k), with kSizeTol slack.
bool verify_witness(const Graph& g, const HomogeneousWitness& w,
                    const TheoremParams& p);

// Canonical enumeration of the unordered pairs of [0,n): row-major over
// u < v. Shared by the generators and the exhaustive Ramsey search.
long long pair_count(int n);
long long edge_index(int n, int u, int v);
std::pair<int, int> edge_from_index(int n, long long idx);

}  // namespace homset
