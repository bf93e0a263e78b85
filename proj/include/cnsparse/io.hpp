#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cnsparse/graph.hpp"
#include "cnsparse/hypergraph.hpp"

namespace cnsparse {

/// Parse failure naming the offending line of the input.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Result of reading an edge-list file. Arbitrary node labels are remapped
/// to dense ids 0..n-1 in order of first appearance; `labels[i]` is the
/// original token for node i.
struct LoadedGraph {
    Graph graph;                       // always populated (weights dropped)
    WeightedGraph weighted;            // populated when weighted == true
    bool has_weights = false;
    std::vector<std::string> labels;
};

/// Edge-list text: one edge per line, "i j" or "i j w"; '#' starts a
/// comment; blank lines are ignored.
LoadedGraph read_edge_list(std::istream& in);
LoadedGraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
/// Weighted edges are written "i j w" with full-precision weights.
void write_edge_list(std::ostream& out, const WeightedGraph& g);
void write_edge_list_file(const std::string& path, const WeightedGraph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Hyperedge text: one hyperedge per line as space-separated node labels;
/// '#' comments and blank lines ignored. Hyperedges of size 1 are a parse
/// error; labels are remapped like read_edge_list.
struct LoadedHypergraph {
    Hypergraph hypergraph;
    std::vector<std::string> labels;
};
LoadedHypergraph read_hyperedge_list(std::istream& in);
LoadedHypergraph read_hyperedge_list_file(const std::string& path);
void write_hyperedge_list(std::ostream& out, const Hypergraph& h);
void write_hyperedge_list_file(const std::string& path, const Hypergraph& h);

}  // namespace cnsparse
