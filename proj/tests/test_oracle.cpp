#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "homset/bounds.hpp"
#include "homset/generators.hpp"
#include "homset/oracle.hpp"
#include "test_util.hpp"

using namespace homset;
using testutil::brute_max_clique;
using testutil::brute_max_independent_set;
using testutil::cycle_graph;
using testutil::graph_from_mask;
using testutil::is_clique;
using testutil::k6_minus_matching;
using testutil::random_gnp;

TEST_CASE("max_clique_exact finds the clique number on small graphs") {
  OracleResult c5 = max_clique_exact(cycle_graph(5));
  CHECK(c5.best_size == 2);
  CHECK(c5.exhausted);
  CHECK(is_clique(cycle_graph(5), c5.witness));
  CHECK((int)c5.witness.size() == 2);

  OracleResult k7 = max_clique_exact(Graph::complete(7));
  CHECK(k7.best_size == 7);
  CHECK(k7.witness == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  // the multipartite construction cannot hold a clique above one per part
  OracleResult t10 = max_clique_exact(turan_graph(10, 3));
  CHECK(t10.best_size == 3);
  CHECK(t10.exhausted);

  CHECK(max_clique_exact(Graph::empty_graph(0)).best_size == 0);
  CHECK(max_clique_exact(Graph::empty_graph(4)).best_size == 1);
}

TEST_CASE("max_independent_set_exact works through the complement") {
  CHECK(max_independent_set_exact(cycle_graph(5)).best_size == 2);
  CHECK(max_independent_set_exact(Graph::empty_graph(6)).best_size == 6);

  Graph g = k6_minus_matching();
  CHECK(brute_max_independent_set(g) == 2);
  OracleResult r = max_independent_set_exact(g);
  CHECK(r.best_size == 2);
  CHECK(testutil::is_independent(g, r.witness));
}

TEST_CASE("clique and independent-set sizes swap under complement") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_gnp(9, 1, 2, 4000 + seed);
    CHECK(max_clique_exact(g).best_size ==
          max_independent_set_exact(g.complement()).best_size);
  }
}

TEST_CASE("branch and bound agrees with subset enumeration on 500 graphs") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    int n = 1 + int(i % 7);
    Graph g = random_gnp(n, 1 + i % 4, 5, 9000 + i);
    OracleResult r = max_clique_exact(g);
    CHECK(r.best_size == brute_max_clique(g));
    CHECK(r.exhausted);
    CHECK((int)r.witness.size() == r.best_size);
    CHECK(is_clique(g, r.witness));
  }
}

TEST_CASE("stop_at returns early with a large-enough clique") {
  OracleOptions opts;
  opts.stop_at = 4;
  OracleResult r = max_clique_exact(Graph::complete(10), opts);
  CHECK(r.best_size >= 4);
  CHECK(is_clique(Graph::complete(10), r.witness));

  // stop_at above the clique number degrades to an exhaustive run
  opts.stop_at = 5;
  OracleResult t = max_clique_exact(turan_graph(12, 3), opts);
  CHECK(t.best_size == 3);
  CHECK(t.exhausted);

  // the guarantee: whenever the true number reaches x, so does the result
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_gnp(10, 3, 5, 70000 + seed);
    int truth = brute_max_clique(g);
    for (int x = 1; x <= truth; ++x) {
      OracleOptions o;
      o.stop_at = x;
      CHECK(max_clique_exact(g, o).best_size >= x);
    }
  }
}

TEST_CASE("an exhausted time budget reports the best solution found") {
  // dense enough that the search passes its first deadline poll
  Graph g = random_gnp(150, 9, 10, 31337);
  OracleOptions opts;
  opts.budget_secs = 0.0;
  try {
    max_clique_exact(g, opts);
    FAIL("expected the zero budget to interrupt the search");
  } catch (const BudgetExceeded& e) {
    CHECK(e.best_size >= 1);
    CHECK((int)e.best_witness.size() == e.best_size);
    CHECK(is_clique(g, e.best_witness));
    CHECK(e.nodes_explored > 0);
  }
}

TEST_CASE("ramsey_check decides small instances exhaustively") {
  RamseyResult r = ramsey_check(6, 3, 3);
  CHECK(r.holds);
  CHECK_FALSE(r.counterexample.has_value());

  RamseyResult c = ramsey_check(5, 3, 3);
  CHECK_FALSE(c.holds);
  REQUIRE(c.counterexample.has_value());
  CHECK(c.counterexample->order() == 5);
  CHECK(brute_max_clique(*c.counterexample) == 2);
  CHECK(brute_max_independent_set(*c.counterexample) == 2);

  for (int n = 1; n <= 5; ++n) {
    CHECK(ramsey_check(n, 1, 9).holds);
    CHECK(ramsey_check(n, 9, 1).holds);
  }

  // R(2,2) = 2: one vertex has neither an edge nor a two-point IS
  RamseyResult one = ramsey_check(1, 2, 2);
  CHECK_FALSE(one.holds);
  REQUIRE(one.counterexample.has_value());
  CHECK(one.counterexample->order() == 1);
  CHECK(ramsey_check(2, 2, 2).holds);
}

TEST_CASE("ramsey_check guards its exhaustive budget and its inputs") {
  CHECK_THROWS_AS(ramsey_check(8, 3, 4), BudgetExceeded);
  CHECK_NOTHROW(ramsey_check(8, 2, 2, 28));
  CHECK_THROWS_AS(ramsey_check(-1, 3, 3), InvalidInput);
  CHECK_THROWS_AS(ramsey_check(5, 0, 3), InvalidInput);
  CHECK_THROWS_AS(ramsey_check(5, 3, 0), InvalidInput);
}

TEST_CASE("the binomial bound is an upper bound on Ramsey numbers up to 7") {
  for (int s = 1; s <= 7; ++s)
    for (int t = 1; t <= 7; ++t) {
      BigInt bound = es_upper_bound(s, t);
      if (bound > 7) continue;
      int n = bound.convert_to<int>();
      CHECK(ramsey_check(n, s, t).holds);
    }
}
