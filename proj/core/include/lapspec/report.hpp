#pragma once
// JSON serialization of census, moments, and bound results, plus the graph
// summary block shared by all reports.

#include "lapspec/bounds.hpp"
#include "lapspec/census.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/moments.hpp"

#include <json.hpp>

namespace lapspec {

struct GraphSummary {
    int n = 0;
    int e = 0;
    int components = 0;
    int d_max = 0;
};

GraphSummary summarize(const Graph& g);

// Rationals serialize as {"num": ..., "den": ...} in lowest terms, den > 0.
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GraphSummary& s);

nlohmann::json census_to_json(const StructuralCensus& c);
// Accepts censuses without per-node counts (replayed feature vectors).
StructuralCensus census_from_json(const nlohmann::json& j);

nlohmann::json moments_to_json(const MomentSequence& ms);

nlohmann::json bound_result_to_json(const BoundResult& br);

}  // namespace lapspec
