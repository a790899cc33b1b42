#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "homset/graph.hpp"
#include "test_util.hpp"

using namespace homset;
using testutil::cycle_graph;
using testutil::path_graph;
using testutil::random_gnp;

TEST_CASE("from_edges builds the exact edge set and collapses duplicates") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));

  CHECK(Graph::from_edges(1, {}).edge_count() == 0);

  Graph dup = Graph::from_edges(4, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("from_edges rejects out-of-range endpoints and self-loops") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidInput);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph::from_edges(3, {{2, 2}}), InvalidInput);
}

TEST_CASE("from_rows validates width, diagonal and symmetry") {
  std::vector<Bitset> rows(3, Bitset(3));
  rows[0].set(1);
  rows[1].set(0);
  Graph g = Graph::from_rows(rows);
  CHECK(g.edge_count() == 1);

  std::vector<Bitset> bad_width(3, Bitset(4));
  CHECK_THROWS_AS(Graph::from_rows(bad_width), InvalidInput);

  std::vector<Bitset> diag(2, Bitset(2));
  diag[0].set(0);
  CHECK_THROWS_AS(Graph::from_rows(diag), InvalidInput);

  std::vector<Bitset> asym(2, Bitset(2));
  asym[0].set(1);
  CHECK_THROWS_AS(Graph::from_rows(asym), InvalidInput);
}

TEST_CASE("complement flips adjacency on distinct pairs") {
  Graph p = path_graph(3);
  Graph pc = p.complement();
  CHECK(pc.edge_count() == 1);
  CHECK(pc.adjacent(0, 2));
  CHECK_FALSE(pc.adjacent(0, 1));

  CHECK(Graph::complete(4).complement() == Graph::empty_graph(4));

  Graph g = random_gnp(10, 1, 2, 77);
  CHECK(g.complement().complement() == g);
}

TEST_CASE("edge counts of a graph and its complement partition all pairs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 1 + int(seed % 13);
    Graph g = random_gnp(n, 2, 5, seed);
    CHECK(g.edge_count() + g.complement().edge_count() == pair_count(n));
  }
}

TEST_CASE("induced_subgraph keeps exactly the internal edges") {
  auto [k3, map3] = Graph::complete(4).induced_subgraph(std::vector<int>{0, 1, 2});
  CHECK(k3 == Graph::complete(3));
  CHECK(map3 == std::vector<int>{0, 1, 2});

  auto [none, map0] = cycle_graph(5).induced_subgraph(std::vector<int>{});
  CHECK(none.order() == 0);
  CHECK(map0.empty());

  auto [slice, map5] = cycle_graph(5).induced_subgraph(std::vector<int>{0, 1, 2});
  CHECK(slice.order() == 3);
  CHECK(slice.edge_count() == 2);
  CHECK(slice.adjacent(0, 1));
  CHECK(slice.adjacent(1, 2));
  CHECK_FALSE(slice.adjacent(0, 2));

  // the map goes local -> parent and vertices are deduplicated ascending
  auto [sub, map] = cycle_graph(5).induced_subgraph(std::vector<int>{4, 2, 4});
  CHECK(map == std::vector<int>{2, 4});
  CHECK(sub.order() == 2);
  CHECK_FALSE(sub.adjacent(0, 1));

  CHECK_THROWS_AS(cycle_graph(5).induced_subgraph(std::vector<int>{5}),
                  InvalidInput);
}

TEST_CASE("check_homogeneous labels cliques, independent sets and neither") {
  CHECK(check_homogeneous(Graph::complete(3), std::vector<int>{0, 1, 2}) ==
        Homogeneity::Clique);
  CHECK(check_homogeneous(Graph::empty_graph(2), std::vector<int>{0, 1}) ==
        Homogeneity::IndependentSet);
  CHECK(check_homogeneous(path_graph(3), std::vector<int>{0, 1, 2}) ==
        Homogeneity::Neither);
  CHECK(check_homogeneous(path_graph(3), std::vector<int>{1}) ==
        Homogeneity::Both);
  CHECK(check_homogeneous(path_graph(3), std::vector<int>{}) ==
        Homogeneity::Both);
  CHECK(check_homogeneous(path_graph(3), std::vector<int>{1, 1}) ==
        Homogeneity::Both);
  CHECK_THROWS_AS(check_homogeneous(path_graph(3), std::vector<int>{3}),
                  InvalidInput);
}

TEST_CASE("homogeneity dualizes under complement for sets of two or more") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 4 + int(seed % 6);
    Graph g = random_gnp(n, 1, 2, 1000 + seed);
    Graph gc = g.complement();
    Rng rng(seed);
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (rng.below(2)) s.push_back(v);
    if ((int)s.size() < 2) s = {0, 1};
    Homogeneity h = check_homogeneous(g, s);
    Homogeneity hc = check_homogeneous(gc, s);
    CHECK((h == Homogeneity::Clique) == (hc == Homogeneity::IndependentSet));
    CHECK((h == Homogeneity::IndependentSet) == (hc == Homogeneity::Clique));
  }
}

TEST_CASE("majority_graph returns the larger class and the minority share") {
  // 5 red edges of K_4 leave one blue edge
  TwoColoring c = TwoColoring::from_red_edges(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto [maj, frac] = majority_graph(c);
  CHECK(maj.edge_count() == 5);
  CHECK(maj.adjacent(0, 1));
  CHECK_FALSE(maj.adjacent(2, 3));
  CHECK(frac == doctest::Approx(1.0 / 6));

  TwoColoring all_red = TwoColoring::from_red_graph(Graph::complete(3));
  auto [maj2, frac2] = majority_graph(all_red);
  CHECK(maj2.edge_count() == 3);
  CHECK(frac2 == 0.0);

  // 3/3 tie on K_4: the red class wins
  TwoColoring tie = TwoColoring::from_red_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  auto [maj3, frac3] = majority_graph(tie);
  CHECK(maj3 == tie.red_graph());
  CHECK(frac3 == doctest::Approx(0.5));

  CHECK_THROWS_AS(majority_graph(TwoColoring::from_red_edges(1, {})),
                  InvalidInput);
}

TEST_CASE("is_eps_balanced compares both classes against the eps fraction") {
  TwoColoring c = TwoColoring::from_red_edges(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_FALSE(is_eps_balanced(c, 0.2));       // 1/6 < 0.2
  CHECK(is_eps_balanced(c, Rational{1, 6}));  // at least, non-strict
  CHECK(is_eps_balanced(c, 1.0 / 6));

  TwoColoring all_red = TwoColoring::from_red_graph(Graph::complete(3));
  CHECK_FALSE(is_eps_balanced(all_red, 0.01));
  CHECK_FALSE(is_eps_balanced(all_red, Rational{1, 100}));

  CHECK_THROWS_AS(is_eps_balanced(c, 0.0), InvalidInput);
  CHECK_THROWS_AS(is_eps_balanced(c, 0.6), InvalidInput);
  CHECK_THROWS_AS(is_eps_balanced(c, -0.1), InvalidInput);
  CHECK_THROWS_AS(is_eps_balanced(c, Rational{0, 5}), InvalidInput);
  CHECK_THROWS_AS(is_eps_balanced(c, Rational{2, 3}), InvalidInput);
  CHECK_THROWS_AS(is_eps_balanced(c, Rational{1, -2}), InvalidInput);
}

TEST_CASE("unbalance is equivalent to a dense majority graph") {
  // both sides computed exactly: min*den < num*M  <=>  maj*den > (den-num)*M
  std::vector<Rational> eps_list = {{1, 10}, {1, 6}, {1, 4}, {1, 2}};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 4 + int(seed % 12);
    long long total = pair_count(n);
    Rng rng(seed * 13 + 1);
    long long red = (long long)rng.below(std::uint64_t(total) + 1);
    std::vector<std::pair<int, int>> red_edges;
    for (long long i = 0; i < red; ++i)
      red_edges.push_back(edge_from_index(n, i));
    TwoColoring c = TwoColoring::from_red_edges(n, red_edges);
    for (Rational eps : eps_list) {
      bool balanced = is_eps_balanced(c, eps);
      long long maj = majority_graph(c).first.edge_count();
      bool dense_majority = maj * eps.den > (eps.den - eps.num) * total;
      CHECK(balanced == !dense_majority);
    }
  }
}

TEST_CASE("verify_witness checks the kind and the size target") {
  TheoremParams p{5, 2.0, 0.01};  // target = 0.02*log2(5), about 0.046
  Graph k5 = Graph::complete(5);
  CHECK(verify_witness(k5, {WitnessKind::Clique, {0, 1, 2}, CaseLabel::Trivial}, p));
  CHECK(verify_witness(k5, {WitnessKind::Clique, {0}, CaseLabel::Trivial}, p));
  CHECK_FALSE(verify_witness(cycle_graph(5),
                             {WitnessKind::Clique, {0, 1, 2}, CaseLabel::Trivial},
                             p));
  // a singleton confirms either kind
  CHECK(verify_witness(k5, {WitnessKind::IndependentSet, {2}, CaseLabel::Trivial}, p));
  // an empty vertex set can never reach the positive target
  CHECK_FALSE(verify_witness(k5, {WitnessKind::Clique, {}, CaseLabel::Trivial}, p));
  CHECK_THROWS_AS(verify_witness(k5, {WitnessKind::Clique, {0}, CaseLabel::Trivial},
                                 TheoremParams{2, 2.0, 0.01}),
                  Error);
}

TEST_CASE("verify_witness never flips on homogeneity-preserving growth") {
  TheoremParams p{8, 2.0, 0.01};
  Graph g = Graph::complete(8);
  HomogeneousWitness w{WitnessKind::Clique, {0}, CaseLabel::Trivial};
  bool prev = verify_witness(g, w, p);
  for (int v = 1; v < 8; ++v) {
    w.vertices.push_back(v);
    bool now = verify_witness(g, w, p);
    CHECK((!prev || now));
    prev = now;
  }
}

TEST_CASE("pair indexing is a bijection in row-major order") {
  int n = 9;
  long long idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx) {
      CHECK(edge_index(n, u, v) == idx);
      CHECK(edge_index(n, v, u) == idx);
      auto [a, b] = edge_from_index(n, idx);
      CHECK(a == u);
      CHECK(b == v);
    }
  CHECK(idx == pair_count(n));
}

TEST_CASE("a coloring splits the pairs of K_n between red and blue") {
  TwoColoring c = TwoColoring::from_red_edges(5, {{0, 1}, {2, 3}});
  CHECK(c.order() == 5);
  CHECK(c.total_edges() == 10);
  CHECK(c.red_count() == 2);
  CHECK(c.blue_count() == 8);
  CHECK(c.blue_graph() == c.red_graph().complement());
  CHECK(c.red_graph().adjacent(0, 1));
  CHECK_FALSE(c.blue_graph().adjacent(0, 1));
}
