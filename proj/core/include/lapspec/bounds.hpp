#pragma once
// Hankel moment matrices, the localizing pencil H_s(x) = R_odd - x R_even,
// and the bisection solvers for the support bounds alpha_s and beta_s.

#include "lapspec/graph.hpp"
#include "lapspec/moments.hpp"
#include "lapspec/numerics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lapspec {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kPsdEps = 1e-10;
inline constexpr double kCrosscheckTol = 1e-6;

struct HankelPair {
    int s = 0;
    SymMatrix r_even;  // R_2s,   entries m̄_{r+c}   with m̄_0 = 1
    SymMatrix r_odd;   // R_2s+1, entries m̄_{r+c+1}
};

// scaled holds m̄_1, m̄_2, ... and must reach m̄_{2s+1}.
HankelPair hankel_pair(const std::vector<double>& scaled, int s);
HankelPair hankel_pair(const std::vector<Rational>& scaled, int s);

SymMatrix localizing_matrix(double x, const HankelPair& hp);

struct BisectResult {
    double value = 0.0;
    int iterations = 0;
    double lo = 0.0, hi = 0.0;  // final bracket
};

// Largest x with H_s(x) PSD, to absolute accuracy tol. x_hi must be an upper
// bound for the support (for graphs: 2 d_max + 1). x = 0 is always feasible
// for genuine moment sequences; a sequence failing that check is rejected.
BisectResult alpha_bound(const std::vector<double>& scaled, int s, double tol, double x_hi);

// Smallest x with -H_s(x) PSD; mirror of alpha_bound, bisecting downward.
BisectResult beta_bound(const std::vector<double>& scaled, int s, double tol, double x_hi);

// Bracket caps. The census-only form relies on lambda_n <= n for simple
// graphs and on lambda_n <= trace(L) = n m_1.
double bracket_cap(const Graph& g);
double bracket_cap_from_moments(int n, double scaled_m1);

struct BoundResult {
    int s = 2;
    double tol = kDefaultTol;
    double alpha = 0.0, beta = 0.0;
    int alpha_iterations = 0, beta_iterations = 0;
    double alpha_bracket[2] = {0.0, 0.0};
    double beta_bracket[2] = {0.0, 0.0};
    std::optional<double> lambda2, lambdaN;   // present with exact spectrum
    std::optional<double> alpha_eig, beta_eig;  // generalized-eigenvalue cross-check
    bool crosscheck_ok = true;
    std::vector<std::string> warnings;  // machine-readable codes
};

struct BoundOptions {
    double tol = kDefaultTol;
    bool exact_spectrum = false;  // attach lambda_2, lambda_n from the eigensolver
    bool use_trace_oracle = false;  // moments via trace powers (required for s > 2)
};

// census -> moments -> scaling -> bounds, plus diagnostics. Disconnected
// input attaches a warning (the gap-bound reading needs connectivity) but
// still computes everything.
BoundResult bound_report(const Graph& g, int s, const BoundOptions& opt = {});

// Same solver fed with an externally supplied moment sequence.
BoundResult bound_report_from_moments(const MomentSequence& ms, int s, double tol = kDefaultTol);

}  // namespace lapspec
