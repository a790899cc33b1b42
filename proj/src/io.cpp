#include "homset/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace homset {

namespace {

// Strips one trailing '\r' so CRLF files parse like LF files.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  if (!std::getline(in, line)) return false;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

void reject_trailing(std::istringstream& ls, int lineno) {
  std::string extra;
  if (ls >> extra)
    throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
}

struct EdgeFile {
  std::string format;  // "edge" or "kcol"
  int n = 0;
  long long m = 0;
  std::vector<std::pair<int, int>> edges;  // 0-indexed, u < v
};

EdgeFile parse_edge_file(std::istream& in) {
  EdgeFile f;
  bool have_header = false;
  std::unordered_set<long long> seen;
  std::string line;
  int lineno = 0;
  while (next_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (!(ls >> f.format >> f.n >> f.m))
        throw ParseError(lineno, "malformed header, expected 'p <format> <n> <m>'");
      reject_trailing(ls, lineno);
      if (f.format != "edge" && f.format != "kcol")
        throw ParseError(lineno, "unknown format '" + f.format + "'");
      if (f.n < 0 || f.m < 0)
        throw ParseError(lineno, "negative count in header");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header)
        throw ParseError(lineno, "edge line before the header");
      int u = 0, v = 0;
      if (!(ls >> u >> v))
        throw ParseError(lineno, "malformed edge line, expected 'e <u> <v>'");
      reject_trailing(ls, lineno);
      if (u < 1 || u > f.n || v < 1 || v > f.n)
        throw ParseError(lineno, "endpoint out of range [1, " +
                                     std::to_string(f.n) + "]");
      if (u == v) throw ParseError(lineno, "self-loop at vertex " +
                                               std::to_string(u));
      if (u > v) std::swap(u, v);
      long long code = (long long)(u - 1) * f.n + (v - 1);
      if (!seen.insert(code).second)
        throw ParseError(lineno, "duplicate edge (" + std::to_string(u) +
                                     ", " + std::to_string(v) + ")");
      f.edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(lineno, "unrecognized line tag '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p' header line");
  if ((long long)f.edges.size() != f.m)
    throw ParseError(0, "header declares " + std::to_string(f.m) +
                            " edges but the file lists " +
                            std::to_string(f.edges.size()));
  return f;
}

void write_edge_lines(const Graph& g, std::ostream& out) {
  for (int u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](int v) {
      if (v > u) out << "e " << u + 1 << " " << v + 1 << "\n";
    });
}

template <typename T>
T read_from_file(const std::string& path, T (*reader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  return reader(in);
}

template <typename T>
void write_to_file(const T& x, const std::string& path,
                   void (*writer)(const T&, std::ostream&)) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot open file for writing: " + path);
  writer(x, out);
  out.flush();
  if (!out) throw ParseError(0, "write failed: " + path);
}

}  // namespace

Graph read_graph(std::istream& in) {
  EdgeFile f = parse_edge_file(in);
  if (f.format != "edge")
    throw ParseError(0, "expected a graph file (p edge), found p " + f.format);
  return Graph::from_edges(f.n, f.edges);
}

TwoColoring read_coloring(std::istream& in) {
  EdgeFile f = parse_edge_file(in);
  if (f.format != "kcol")
    throw ParseError(0,
                     "expected a coloring file (p kcol), found p " + f.format);
  return TwoColoring::from_red_edges(f.n, f.edges);
}

std::variant<Graph, TwoColoring> read_graph_or_coloring(std::istream& in) {
  EdgeFile f = parse_edge_file(in);
  if (f.format == "edge")
    return Graph::from_edges(f.n, f.edges);
  return TwoColoring::from_red_edges(f.n, f.edges);
}

HomogeneousWitness read_witness(std::istream& in) {
  HomogeneousWitness w;
  bool have_w = false;
  long long declared = 0;
  std::string line;
  int lineno = 0;
  while (next_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") {
      std::string key, value;
      if (ls >> key >> value && key == "case") {
        if (value == "Case1") w.case_used = CaseLabel::Case1;
        else if (value == "Case2") w.case_used = CaseLabel::Case2;
        else if (value == "Case3") w.case_used = CaseLabel::Case3;
        else if (value == "Trivial") w.case_used = CaseLabel::Trivial;
      }
      continue;
    }
    if (tag == "w") {
      if (have_w) throw ParseError(lineno, "duplicate witness header");
      std::string kind;
      if (!(ls >> kind >> declared))
        throw ParseError(lineno,
                         "malformed witness header, expected 'w <kind> <size>'");
      reject_trailing(ls, lineno);
      if (kind == "clique")
        w.kind = WitnessKind::Clique;
      else if (kind == "independent_set")
        w.kind = WitnessKind::IndependentSet;
      else
        throw ParseError(lineno, "unknown witness kind '" + kind + "'");
      if (declared < 0) throw ParseError(lineno, "negative witness size");
      have_w = true;
    } else if (tag == "v") {
      if (!have_w)
        throw ParseError(lineno, "vertex line before the witness header");
      int v = 0;
      if (!(ls >> v)) throw ParseError(lineno, "malformed vertex line");
      reject_trailing(ls, lineno);
      if (v < 1)
        throw ParseError(lineno, "vertex index must be >= 1, got " +
                                     std::to_string(v));
      w.vertices.push_back(v - 1);
    } else {
      throw ParseError(lineno, "unrecognized line tag '" + tag + "'");
    }
  }
  if (!have_w) throw ParseError(0, "missing 'w' header line");
  if ((long long)w.vertices.size() != declared)
    throw ParseError(0, "witness declares " + std::to_string(declared) +
                            " vertices but the file lists " +
                            std::to_string(w.vertices.size()));
  std::sort(w.vertices.begin(), w.vertices.end());
  if (std::adjacent_find(w.vertices.begin(), w.vertices.end()) !=
      w.vertices.end())
    throw ParseError(0, "duplicate vertex in witness");
  return w;
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "p edge " << g.order() << " " << g.edge_count() << "\n";
  write_edge_lines(g, out);
}

void write_coloring(const TwoColoring& c, std::ostream& out) {
  out << "p kcol " << c.order() << " " << c.red_count() << "\n";
  write_edge_lines(c.red_graph(), out);
}

void write_witness(const HomogeneousWitness& w, std::ostream& out) {
  out << "c case " << to_string(w.case_used) << "\n";
  out << "w " << to_string(w.kind) << " " << w.vertices.size() << "\n";
  std::vector<int> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) out << "v " << v + 1 << "\n";
}

Graph read_graph_file(const std::string& path) {
  return read_from_file(path, read_graph);
}

TwoColoring read_coloring_file(const std::string& path) {
  return read_from_file(path, read_coloring);
}

std::variant<Graph, TwoColoring> read_graph_or_coloring_file(
    const std::string& path) {
  return read_from_file(path, read_graph_or_coloring);
}

HomogeneousWitness read_witness_file(const std::string& path) {
  return read_from_file(path, read_witness);
}

void write_graph_file(const Graph& g, const std::string& path) {
  write_to_file(g, path, write_graph);
}

void write_coloring_file(const TwoColoring& c, const std::string& path) {
  write_to_file(c, path, write_coloring);
}

void write_witness_file(const HomogeneousWitness& w, const std::string& path) {
  write_to_file(w, path, write_witness);
}

}  // namespace homset
