#include "lapspec/bounds.hpp"

#include "lapspec/census.hpp"

#include <algorithm>
#include <cmath>

namespace lapspec {

HankelPair hankel_pair(const std::vector<double>& scaled, int s) {
    if (s < 1) throw std::invalid_argument("relaxation order must be >= 1");
    if (int(scaled.size()) < 2 * s + 1)
        throw std::invalid_argument("order " + std::to_string(s) + " needs " +
                                    std::to_string(2 * s + 1) + " scaled moments, got " +
                                    std::to_string(scaled.size()));
    auto mbar = [&](int k) { return k == 0 ? 1.0 : scaled[k - 1]; };
    HankelPair hp;
    hp.s = s;
    hp.r_even = SymMatrix(s + 1);
    hp.r_odd = SymMatrix(s + 1);
    for (int r = 0; r <= s; ++r) {
        for (int c = 0; c <= s; ++c) {
            hp.r_even.at(r, c) = mbar(r + c);
            hp.r_odd.at(r, c) = mbar(r + c + 1);
        }
    }
    return hp;
}

HankelPair hankel_pair(const std::vector<Rational>& scaled, int s) {
    std::vector<double> d;
    d.reserve(scaled.size());
    for (const Rational& r : scaled) d.push_back(r.to_double());
    return hankel_pair(d, s);
}

SymMatrix localizing_matrix(double x, const HankelPair& hp) {
    SymMatrix h(hp.s + 1);
    for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] = hp.r_odd.a[i] - x * hp.r_even.a[i];
    return h;
}

namespace {

int iteration_cap(double range, double tol) {
    return 10 * int(std::ceil(std::log2(std::max(range / tol, 2.0))));
}

std::string bracket_str(double lo, double hi) {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

}  // namespace

BisectResult alpha_bound(const std::vector<double>& scaled, int s, double tol, double x_hi) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (x_hi <= 0.0) throw std::invalid_argument("bracket cap must be positive");
    HankelPair hp = hankel_pair(scaled, s);
    auto feasible = [&](double x) { return ldlt_psd(localizing_matrix(x, hp), kPsdEps).psd; };

    if (!feasible(0.0))
        throw std::runtime_error("H_s(0) is not positive semidefinite: "
                                 "input is not a valid moment sequence");
    double lo = 0.0, hi = x_hi;
    for (int grow = 0; feasible(hi); ++grow) {
        if (grow >= 8)
            throw std::runtime_error("alpha bisection found no infeasible cap up to " +
                                     std::to_string(hi) + "; input moments look unbounded");
        hi *= 2.0;
    }
    BisectResult r;
    int cap = iteration_cap(hi - lo, tol);
    while (hi - lo > tol) {
        if (++r.iterations > cap)
            throw std::runtime_error("alpha bisection exceeded " + std::to_string(cap) +
                                     " iterations, bracket " + bracket_str(lo, hi));
        double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    r.lo = lo;
    r.hi = hi;
    r.value = 0.5 * (lo + hi);
    return r;
}

BisectResult beta_bound(const std::vector<double>& scaled, int s, double tol, double x_hi) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (x_hi <= 0.0) throw std::invalid_argument("bracket cap must be positive");
    HankelPair hp = hankel_pair(scaled, s);
    auto feasible = [&](double x) {
        SymMatrix h = localizing_matrix(x, hp);
        for (double& v : h.a) v = -v;
        return ldlt_psd(h, kPsdEps).psd;
    };

    double hi = x_hi;
    for (int grow = 0; !feasible(hi); ++grow) {
        if (grow >= 8)
            throw std::runtime_error("beta bisection found no feasible cap up to " +
                                     std::to_string(hi) + "; input is not a valid moment sequence");
        hi *= 2.0;
    }
    BisectResult r;
    if (feasible(0.0)) {  // support collapsed to {0}: empty graph
        r.value = r.lo = r.hi = 0.0;
        return r;
    }
    double lo = 0.0;
    int cap = iteration_cap(hi - lo, tol);
    while (hi - lo > tol) {
        if (++r.iterations > cap)
            throw std::runtime_error("beta bisection exceeded " + std::to_string(cap) +
                                     " iterations, bracket " + bracket_str(lo, hi));
        double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    r.lo = lo;
    r.hi = hi;
    r.value = 0.5 * (lo + hi);
    return r;
}

double bracket_cap(const Graph& g) { return 2.0 * g.d_max() + 1.0; }

double bracket_cap_from_moments(int n, double scaled_m1) {
    if (n < 2) throw std::invalid_argument("bracket cap needs n >= 2");
    return std::min(double(n), double(n) * scaled_m1) + 1.0;
}

namespace {

// Generalized eigenvalues of (R_odd, R_even) via Cholesky reduction; skipped
// when R_even is rank-deficient, which is the expected state for spectra with
// fewer than s+1 distinct nontrivial values.
void crosscheck(const std::vector<double>& scaled, int s, BoundResult& br) {
    HankelPair hp = hankel_pair(scaled, s);
    std::vector<double> g;
    if (!cholesky(hp.r_even, g)) return;
    int m = s + 1;
    auto G = [&](int i, int j) { return g[std::size_t(i) * m + j]; };

    // Y = G^-1 R_odd (forward substitution per column)
    std::vector<double> y(std::size_t(m) * m);
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < m; ++r) {
            double v = hp.r_odd.at(r, c);
            for (int k = 0; k < r; ++k) v -= G(r, k) * y[std::size_t(k) * m + c];
            y[std::size_t(r) * m + c] = v / G(r, r);
        }
    }
    // X = G^-1 Y^T, so that X^T = Y G^-T is the reduced pencil
    std::vector<double> x(std::size_t(m) * m);
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < m; ++r) {
            double v = y[std::size_t(c) * m + r];
            for (int k = 0; k < r; ++k) v -= G(r, k) * x[std::size_t(k) * m + c];
            x[std::size_t(r) * m + c] = v / G(r, r);
        }
    }
    SymMatrix c(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            c.at(i, j) = 0.5 * (x[std::size_t(i) * m + j] + x[std::size_t(j) * m + i]);

    std::vector<double> eig = sym_eigenvalues(c);
    br.alpha_eig = eig.front();
    br.beta_eig = eig.back();
    bool alpha_ok = std::abs(br.alpha - *br.alpha_eig) <= kCrosscheckTol;
    bool beta_ok = std::abs(br.beta - *br.beta_eig) <= kCrosscheckTol;
    br.crosscheck_ok = alpha_ok && beta_ok;
    if (!br.crosscheck_ok) br.warnings.push_back("crosscheck_failed");
}

BoundResult solve_bounds(const MomentSequence& ms, int s, double tol, double cap) {
    std::vector<Rational> scaled_r = scale_nontrivial(ms);
    if (int(scaled_r.size()) < 2 * s + 1)
        throw std::invalid_argument("order " + std::to_string(s) + " needs " +
                                    std::to_string(2 * s + 1) + " moments, sequence has " +
                                    std::to_string(scaled_r.size()));
    std::vector<double> scaled;
    scaled.reserve(scaled_r.size());
    for (const Rational& r : scaled_r) scaled.push_back(r.to_double());

    BoundResult br;
    br.s = s;
    br.tol = tol;
    BisectResult a = alpha_bound(scaled, s, tol, cap);
    br.alpha = a.value;
    br.alpha_iterations = a.iterations;
    br.alpha_bracket[0] = a.lo;
    br.alpha_bracket[1] = a.hi;
    BisectResult b = beta_bound(scaled, s, tol, cap);
    br.beta = b.value;
    br.beta_iterations = b.iterations;
    br.beta_bracket[0] = b.lo;
    br.beta_bracket[1] = b.hi;
    if (br.alpha > br.beta + 10.0 * tol) br.warnings.push_back("support_interval_empty");
    crosscheck(scaled, s, br);
    return br;
}

}  // namespace

BoundResult bound_report(const Graph& g, int s, const BoundOptions& opt) {
    if (g.n < 2) throw std::invalid_argument("support bounds need at least two nodes");
    if (s < 1) throw std::invalid_argument("relaxation order must be >= 1");
    if (s > 2 && !opt.use_trace_oracle)
        throw std::invalid_argument("structural moments stop at order 5; s > 2 requires the "
                                    "trace oracle");
    MomentSequence ms = opt.use_trace_oracle ? moments_trace(laplacian_matrix(g), 2 * s + 1)
                                             : moments_structural(full_census(g));
    BoundResult br = solve_bounds(ms, s, opt.tol, bracket_cap(g));
    if (connected_components(g).count > 1) br.warnings.insert(br.warnings.begin(), "disconnected");
    if (opt.exact_spectrum) {
        std::vector<double> eig = sym_eigenvalues(SymMatrix::from_int(laplacian_matrix(g)));
        br.lambda2 = eig.size() > 1 ? eig[1] : 0.0;
        br.lambdaN = eig.back();
    }
    return br;
}

BoundResult bound_report_from_moments(const MomentSequence& ms, int s, double tol) {
    if (ms.m.empty()) throw std::invalid_argument("empty moment sequence");
    double m1_scaled = scale_nontrivial(ms).front().to_double();
    return solve_bounds(ms, s, tol, bracket_cap_from_moments(ms.n, m1_scaled));
}

}  // namespace lapspec
