#pragma once
// Closed-walk enumeration on the weighted loopy graph, covered subgraphs, and
// the per-isomorphism-class walk weight sums behind the moment decomposition.

#include "lapspec/graph.hpp"
#include "lapspec/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace lapspec {

// Enumeration depth cap; only k <= 5 is ever needed, the slack is headroom.
inline constexpr int kWalkCap = 6;

struct Walk {
    std::vector<int> nodes;  // v_0 .. v_k
    int128 weight = 0;       // product of traversed weights

    bool closed() const { return nodes.size() >= 2 && nodes.front() == nodes.back(); }
    int length() const { return int(nodes.size()) - 1; }
};

// Builds a walk over lg, validating every step and computing its weight.
// Throws when a step uses an absent arc (neither edge nor self-loop).
Walk make_walk(const LaplacianGraph& lg, std::vector<int> nodes);

struct CoveredSubgraph {
    std::vector<int> nodes;                  // sorted original ids
    std::vector<std::pair<int, int>> edges;  // deduplicated non-loop steps, i < j, sorted
    std::string label;  // isomorphism class for <= 6 nodes ("" beyond that)
};

// Nodes and non-loop edges traversed by the walk (Definition: loops excluded).
CoveredSubgraph covered_subgraph(const Walk& w);

// Sum of weights of all closed k-walks based at node i; equals [L^k]_ii.
int128 closed_walk_weight_sum(const LaplacianGraph& lg, int i, int k);

// (1/n) sum over base nodes, the k-th spectral moment by pure enumeration.
Rational moments_via_walks(const LaplacianGraph& lg, int k);

// Labels of every covered-subgraph class reachable by closed k-walks.
const std::vector<std::string>& walk_class_labels(int k);

// Partitions all closed k-walks (k in {4, 5}) by the isomorphism class of
// their covered subgraph and returns the per-class weight sums divided by n.
// Every label from walk_class_labels(k) is present, zero-valued classes too.
// An unclassifiable walk means the enumeration is broken: hard error.
std::map<std::string, Rational> walk_class_sums(const LaplacianGraph& lg, int k);

}  // namespace lapspec
