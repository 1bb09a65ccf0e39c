#pragma once
// Local structural census: degree power sums, per-node triangle/quadrangle/
// pentagon counts, and the six degree-cycle correlation terms.

#include "lapspec/graph.hpp"
#include "lapspec/rational.hpp"

#include <cstdint>
#include <vector>

namespace lapspec {

struct CorrelationTerms {
    Rational C_dd;   // (1/n)  sum over edges {i,j} of d_i d_j
    Rational C_d2d;  // (1/2n) sum over ordered adjacent (i,j) of d_i^2 d_j
    Rational C_dt;   // (1/n)  sum over nodes of d_i t_i
    Rational C_d2t;  // (1/n)  sum over nodes of d_i^2 t_i
    Rational C_dq;   // (1/n)  sum over nodes of d_i q_i
    Rational D_dd;   // (1/n)  sum over edges {i,j} of d_i d_j |N_i cap N_j|
};

struct StructuralCensus {
    int n = 0;
    std::vector<int128> S;        // S[k] = S_{k+1}, degree power sums, k = 0..4
    std::vector<std::int64_t> t;  // per-node triangle counts (empty for replayed censuses)
    std::vector<std::int64_t> q;  // per-node quadrangle counts
    std::vector<std::int64_t> p;  // per-node pentagon counts
    int128 Delta = 0;             // total triangles
    int128 Q = 0;                 // total quadrangles
    int128 P = 0;                 // total pentagons
    CorrelationTerms corr;
};

// Exact power sums S_1..S_pmax of the degree sequence.
std::vector<int128> power_sums(const Graph& g, int pmax);

// |N_i cap N_j| by sorted-list intersection; i and j need not be adjacent.
int common_neighbors(const Graph& g, int i, int j);

struct CycleCensus {
    std::vector<std::int64_t> t, q, p;
    int128 Delta = 0, Q = 0, P = 0;
};

// Exhaustive enumeration of 3-, 4-, and 5-cycles, each counted exactly once
// via its canonical representative (smallest node first, smaller second
// neighbor fixes the direction).
CycleCensus cycle_census(const Graph& g);

CorrelationTerms correlation_terms(const Graph& g, const CycleCensus& cc);

// Assembles everything the moment formulas need.
StructuralCensus full_census(const Graph& g);

}  // namespace lapspec
