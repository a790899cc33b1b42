#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "homset/graph.hpp"

namespace homset {

// Text formats, DIMACS-flavored, 1-indexed on disk and 0-indexed in
// memory; this parser/serializer pair is exactly where the indexing
// convention flips.
//
//   graph:    `p edge <n> <m>`  then m lines `e <u> <v>`, u < v
//   coloring: `p kcol <n> <m_red>` with the red edges of K_n
//   witness:  `c case <label>`, `w <clique|independent_set> <size>`,
//             then <size> lines `v <i>`
//
// `c ...` lines are comments anywhere. Writers emit edges in ascending
// lexicographic order so round-trips are byte-identical. Readers accept
// endpoints in either order but reject self-loops, duplicates,
// out-of-range indices, and header/count mismatches, reporting 1-based
// line numbers.

Graph read_graph(std::istream& in);
TwoColoring read_coloring(std::istream& in);
std::variant<Graph, TwoColoring> read_graph_or_coloring(std::istream& in);
HomogeneousWitness read_witness(std::istream& in);

void write_graph(const Graph& g, std::ostream& out);
void write_coloring(const TwoColoring& c, std::ostream& out);
void write_witness(const HomogeneousWitness& w, std::ostream& out);

Graph read_graph_file(const std::string& path);
TwoColoring read_coloring_file(const std::string& path);
std::variant<Graph, TwoColoring> read_graph_or_coloring_file(
    const std::string& path);
HomogeneousWitness read_witness_file(const std::string& path);

void write_graph_file(const Graph& g, const std::string& path);
void write_coloring_file(const TwoColoring& c, const std::string& path);
void write_witness_file(const HomogeneousWitness& w, const std::string& path);

}  // namespace homset
