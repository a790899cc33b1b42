#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <variant>

#include "homset/generators.hpp"
#include "homset/io.hpp"
#include "test_util.hpp"

using namespace homset;

namespace {

std::string graph_text(const Graph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

HomogeneousWitness witness_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_witness(in);
}

int parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("write_graph emits the documented byte-exact format") {
  CHECK(graph_text(Graph::complete(3)) ==
        "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  CHECK(graph_text(Graph::empty_graph(0)) == "p edge 0 0\n");
  CHECK(graph_text(Graph::empty_graph(1)) == "p edge 1 0\n");
}

TEST_CASE("graphs and colorings round-trip byte-identically") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int n = int(seed % 13);
    long long max_m = pair_count(n);
    Graph g = random_graph_exact_edges(n, (long long)(seed * 7) % (max_m + 1),
                                       seed);
    std::string text = graph_text(g);
    Graph back = graph_from_text(text);
    CHECK(back == g);
    CHECK(graph_text(back) == text);
  }

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    TwoColoring c =
        random_unbalanced_coloring(2 + int(seed % 20), 0.25, seed);
    std::ostringstream out;
    write_coloring(c, out);
    std::istringstream in(out.str());
    TwoColoring back = read_coloring(in);
    CHECK(back.order() == c.order());
    CHECK(back.red_graph() == c.red_graph());
    std::ostringstream again;
    write_coloring(back, again);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("witness files round-trip every kind and case label") {
  for (WitnessKind kind : {WitnessKind::Clique, WitnessKind::IndependentSet}) {
    for (CaseLabel label : {CaseLabel::Case1, CaseLabel::Case2,
                            CaseLabel::Case3, CaseLabel::Trivial}) {
      for (const std::vector<int>& verts :
           {std::vector<int>{}, {0}, {2, 5, 9}}) {
        HomogeneousWitness w{kind, verts, label};
        std::ostringstream out;
        write_witness(w, out);
        HomogeneousWitness back = witness_from_text(out.str());
        CHECK(back.kind == kind);
        CHECK(back.case_used == label);
        CHECK(back.vertices == verts);
        std::ostringstream again;
        write_witness(back, again);
        CHECK(again.str() == out.str());
      }
    }
  }
}

TEST_CASE("readers tolerate comments, blanks, CRLF, and swapped endpoints") {
  Graph g = graph_from_text(
      "c a comment before the header\r\n"
      "\r\n"
      "p edge 4 2\r\n"
      "e 3 1\r\n"
      "c interleaved comment\r\n"
      "e 4 3\r\n");
  CHECK(g == Graph::from_edges(4, {{0, 2}, {2, 3}}));

  HomogeneousWitness w = witness_from_text(
      "c case Case2\n"
      "c unrelated commentary\n"
      "w independent_set 3\n"
      "v 9\n"
      "v 1\n"
      "v 4\n");
  CHECK(w.kind == WitnessKind::IndependentSet);
  CHECK(w.case_used == CaseLabel::Case2);
  CHECK(w.vertices == std::vector<int>{0, 3, 8});  // sorted on read

  // an unknown label in a comment is just a comment
  HomogeneousWitness d = witness_from_text("c case Case9\nw clique 0\n");
  CHECK(d.case_used == CaseLabel::Trivial);
}

TEST_CASE("edge-file errors carry one-based line numbers") {
  auto line_of = [](const std::string& text) {
    return parse_error_line([&] { graph_from_text(text); });
  };

  CHECK(line_of("p edge 3 1\ne 1 1\n") == 2);                  // self-loop
  CHECK(line_of("p edge 3 2\ne 1 2\ne 2 1\n") == 3);           // duplicate
  CHECK(line_of("p edge 3 1\ne 1 4\n") == 2);                  // out of range
  CHECK(line_of("p edge 3 1\ne 0 2\n") == 2);                  // out of range
  CHECK(line_of("p edge 3 1\ne 1\n") == 2);                    // malformed
  CHECK(line_of("p edge 3 1\ne 1 2 7\n") == 2);                // trailing
  CHECK(line_of("c x\np edge 3 0\np edge 3 0\n") == 3);        // dup header
  CHECK(line_of("p edge 3\n") == 1);                           // short header
  CHECK(line_of("p matrix 3 0\n") == 1);                       // unknown fmt
  CHECK(line_of("p edge -1 0\n") == 1);                        // negative n
  CHECK(line_of("e 1 2\np edge 3 1\n") == 1);                  // edge first
  CHECK(line_of("p edge 3 0\nq 1 2\n") == 2);                  // unknown tag
  CHECK(line_of("") == 0);                                     // no header
  CHECK(line_of("p edge 3 2\ne 1 2\n") == 0);                  // count short
  CHECK(line_of("p edge 3 0\ne 1 2\n") == 0);                  // count long
}

TEST_CASE("witness-file errors carry one-based line numbers") {
  auto line_of = [](const std::string& text) {
    return parse_error_line([&] { witness_from_text(text); });
  };

  CHECK(line_of("w clique 1\nw clique 1\nv 1\n") == 2);   // dup header
  CHECK(line_of("w blob 1\nv 1\n") == 1);                 // unknown kind
  CHECK(line_of("w clique -2\n") == 1);                   // negative size
  CHECK(line_of("v 1\nw clique 1\n") == 1);               // vertex first
  CHECK(line_of("w clique 1\nv 0\n") == 2);               // index < 1
  CHECK(line_of("w clique 1\nv x\n") == 2);               // malformed
  CHECK(line_of("w clique 1\nv 1 9\n") == 2);             // trailing
  CHECK(line_of("w clique\n") == 1);                      // short header
  CHECK(line_of("w clique 0\nz\n") == 2);                 // unknown tag
  CHECK(line_of("") == 0);                                // no header
  CHECK(line_of("w clique 2\nv 1\n") == 0);               // count mismatch
  CHECK(line_of("w clique 2\nv 3\nv 3\n") == 0);          // duplicate vertex
}

TEST_CASE("typed readers reject the other format with a clear error") {
  std::string edge_text = "p edge 3 0\n";
  std::string kcol_text = "p kcol 3 0\n";

  std::istringstream a(kcol_text);
  CHECK_THROWS_WITH_AS(read_graph(a),
                       "expected a graph file (p edge), found p kcol",
                       ParseError);
  std::istringstream b(edge_text);
  CHECK_THROWS_WITH_AS(read_coloring(b),
                       "expected a coloring file (p kcol), found p edge",
                       ParseError);

  std::istringstream c(edge_text);
  CHECK(std::holds_alternative<Graph>(read_graph_or_coloring(c)));
  std::istringstream d(kcol_text);
  CHECK(std::holds_alternative<TwoColoring>(read_graph_or_coloring(d)));
}

TEST_CASE("coloring files record red edges against the complete graph") {
  std::istringstream in("p kcol 4 2\ne 1 2\ne 3 4\n");
  TwoColoring c = read_coloring(in);
  CHECK(c.order() == 4);
  CHECK(c.red_count() == 2);
  CHECK(c.blue_count() == 4);
  CHECK(c.red_graph() == Graph::from_edges(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("file wrappers read back what they wrote and flag bad paths") {
  std::string dir = "/tmp/homset_io_test";
  std::filesystem::create_directories(dir);

  Graph g = random_graph_exact_edges(9, 17, 3);
  write_graph_file(g, dir + "/g.graph");
  CHECK(read_graph_file(dir + "/g.graph") == g);

  TwoColoring c = random_unbalanced_coloring(9, 0.25, 3);
  write_coloring_file(c, dir + "/c.kcol");
  CHECK(read_coloring_file(dir + "/c.kcol").red_graph() == c.red_graph());
  CHECK(std::holds_alternative<TwoColoring>(
      read_graph_or_coloring_file(dir + "/c.kcol")));

  HomogeneousWitness w{WitnessKind::Clique, {1, 4}, CaseLabel::Case1};
  write_witness_file(w, dir + "/w.wit");
  HomogeneousWitness back = read_witness_file(dir + "/w.wit");
  CHECK(back.vertices == w.vertices);
  CHECK(back.case_used == CaseLabel::Case1);

  CHECK_THROWS_AS(read_graph_file(dir + "/nope.graph"), ParseError);
  CHECK_THROWS_AS(write_graph_file(g, dir + "/no/such/dir/x"), ParseError);
}
