#pragma once
// Undirected simple graphs: construction, parsing, deterministic generators,
// and the weighted loopy "Laplacian graph" companion.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lapspec {

// Input-side failure (malformed file, bad ids, self-loops). The CLI maps this
// family to exit code 2; everything else is a runtime failure (exit 1).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;     // i < j, lexicographically sorted
    std::vector<std::vector<int>> adjacency;    // sorted neighbor lists
    std::vector<int> degrees;

    // Validates, sorts, and collapses duplicates; self-loops and ids outside
    // [0, n) are rejected. The duplicate count lands in *duplicates if given.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> raw,
                            std::size_t* duplicates = nullptr);

    int num_edges() const { return int(edges.size()); }
    int d_max() const;
    bool has_edge(int i, int j) const;
};

struct ParseOptions {
    bool one_based = false;  // shift all ids down by one
    int declared_nodes = 0;  // CLI-level "nodes N" override; 0 means unset
};

struct ParsedGraph {
    Graph graph;
    std::size_t duplicate_edges = 0;
};

// Edge list: UTF-8 lines "i j", '#' starts a comment, blank lines ignored,
// optional header line "nodes N" for graphs with trailing isolated nodes.
ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& opt = {});

// Matrix Market: coordinate format, pattern or real field, symmetric only.
// Stored entries (i, j), i != j, become undirected edges; values are ignored.
ParsedGraph parse_matrix_market(std::istream& in);

// Writes "i j" lines; emits a "nodes N" header only when the edge lines alone
// would under-declare n (isolated nodes present or no edges at all).
void write_edge_list(const Graph& g, std::ostream& out);

Graph generate_ring(int n);      // cycle R_n, n >= 3
Graph generate_path(int n);      // path P_n
Graph generate_complete(int n);  // K_n
Graph generate_star(int n);      // K_{1,n-1}: hub 0, leaves 1..n-1

// G(n, p) with each pair {i, j} included independently. Membership is decided
// by a counter-based hash keyed on (seed, i, j), so the result is reproducible
// and independent of enumeration order.
Graph generate_erdos_renyi(int n, double p, std::uint64_t seed);

struct Components {
    int count = 0;
    std::vector<int> labels;  // label = smallest node id in the component
};
Components connected_components(const Graph& g);

// Weighted loopy companion of G: every node i carries a self-loop of weight
// d_i and every edge has weight -1. Its dense matrix equals the Laplacian.
struct LaplacianGraph {
    int n = 0;
    // per node: (neighbor, weight) pairs sorted by neighbor, self-loop included
    std::vector<std::vector<std::pair<int, std::int64_t>>> out;

    // weight of arc i -> j, 0 when absent
    std::int64_t weight(int i, int j) const;
};

LaplacianGraph laplacian_graph(const Graph& g);

}  // namespace lapspec
