#pragma once

#include <optional>
#include <string>
#include <vector>

// Strong Markov structures for free groups: labeled directed graphs with a
// start vertex, recurrent subgraphs, path/cycle enumeration, word evaluation,
// and the built-in codings.
//
// Labels are generator symbols; formal inverses carry a trailing apostrophe
// ("a'" is the inverse of "a"). Path evaluation composes labels left to
// right: ev(e1..en) = pi(e1) ... pi(en).

namespace critex {

struct Edge {
  int id = 0;
  int from = 0;
  int to = 0;
  std::string label;
};

struct LabeledGraph {
  std::vector<std::string> vertices;  // names, index = id
  int start = 0;
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  std::vector<std::vector<int>> out_edges() const;  // edge ids by source
};

std::string inverse_label(const std::string& label);

// Free reduction over symbols with apostrophe inverses.
struct GroupWord {
  std::vector<std::string> symbols;  // freely reduced
};
GroupWord reduce(const std::vector<std::string>& symbols);
GroupWord concat(const GroupWord& a, const GroupWord& b);

// 4 recurrent vertices (one per generator of F2 = <a, b>), out-degree 3,
// plus a start vertex with out-degree 4.
LabeledGraph builtin_f2_standard();

// 6-vertex coding of F2 = <a, b, c | abc = 1> whose vertex adjacency matrix
// is the 6x6 grammar matrix with symbol order (a, b, c, a', b', c').
LabeledGraph builtin_f2_abc();

// Union of all directed cycles, via strongly connected components.
LabeledGraph recurrent_subgraph(const LabeledGraph& g);

GroupWord evaluate_path(const LabeledGraph& g, const std::vector<int>& edge_ids);

struct Cycle {
  std::vector<int> edge_ids;  // canonical rotation (lexicographically minimal)
  bool primitive = true;
  int rotations = 1;  // number of distinct rotations = period
};

// All length-n cycles of the recurrent subgraph, one representative per
// rotation class.
std::vector<Cycle> enumerate_cycles(const LabeledGraph& g, int n);

struct ValidationReport {
  bool ok = true;
  std::string message = "ok";
};

// Checks label determinism, reachability from start, and (up to the given
// depth) that path evaluations from start are pairwise distinct reduced
// words of full length.
ValidationReport validate_strong_markov(const LabeledGraph& g, int depth);

// 0/1 edge-count matrix over the recurrent vertices, together with the
// retained vertex ids (in increasing order).
struct AdjacencyMatrix {
  std::vector<int> vertex_ids;
  std::vector<std::vector<double>> a;
};
AdjacencyMatrix vertex_adjacency(const LabeledGraph& g);

}  // namespace critex
