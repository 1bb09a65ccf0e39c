#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lapspec/census.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/rational.hpp"

namespace testutil {

// Plain int64 matrix powers, written independently of the library's
// checked-int path.  Only safe for the tiny graphs used in tests.
using I64Mat = std::vector<std::vector<long long>>;

inline I64Mat i64_identity(int n) {
    I64Mat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline I64Mat i64_mul(const I64Mat& a, const I64Mat& b) {
    const int n = static_cast<int>(a.size());
    I64Mat c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline I64Mat i64_laplacian(const lapspec::Graph& g) {
    I64Mat m(g.n, std::vector<long long>(g.n, 0));
    for (int i = 0; i < g.n; ++i) m[i][i] = g.degrees[i];
    for (const auto& [a, b] : g.edges) {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    return m;
}

inline I64Mat i64_adjacency(const lapspec::Graph& g) {
    I64Mat m(g.n, std::vector<long long>(g.n, 0));
    for (const auto& [a, b] : g.edges) {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    return m;
}

inline long long i64_trace(const I64Mat& m) {
    long long t = 0;
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

// Cycle counts by exhaustive subset enumeration.  Deliberately naive so it
// shares no logic with the library's rooted-path enumeration.
struct BruteCycles {
    std::vector<long long> t, q, p;
    long long Delta = 0, Q = 0, P = 0;
};

inline BruteCycles brute_cycle_census(const lapspec::Graph& g) {
    BruteCycles out;
    out.t.assign(g.n, 0);
    out.q.assign(g.n, 0);
    out.p.assign(g.n, 0);
    auto e = [&](int a, int b) { return g.has_edge(a, b); };

    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (e(a, b) && e(b, c) && e(a, c)) {
                    ++out.Delta;
                    ++out.t[a];
                    ++out.t[b];
                    ++out.t[c];
                }

    // the three circular orders of a labelled 4-set
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    const std::array<std::array<int, 4>, 3> orders = {
                        {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
                    for (const auto& o : orders) {
                        if (e(o[0], o[1]) && e(o[1], o[2]) && e(o[2], o[3]) &&
                            e(o[3], o[0])) {
                            ++out.Q;
                            for (int v : o) ++out.q[v];
                        }
                    }
                }

    // 5-cycles through a fixed smallest node: 4!/2 circular orders per 5-set
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d)
                    for (int f = d + 1; f < g.n; ++f) {
                        std::array<int, 4> rest = {b, c, d, f};
                        std::sort(rest.begin(), rest.end());
                        do {
                            if (rest[0] > rest[3]) continue;  // kill reversals
                            if (e(a, rest[0]) && e(rest[0], rest[1]) &&
                                e(rest[1], rest[2]) && e(rest[2], rest[3]) &&
                                e(rest[3], a)) {
                                ++out.P;
                                ++out.p[a];
                                for (int v : rest) ++out.p[v];
                            }
                        } while (std::next_permutation(rest.begin(), rest.end()));
                    }
    return out;
}

// Deterministic graph family for property tests.  Index picks size, density
// and seed so suites are reproducible without a config knob.
inline lapspec::Graph random_graph(int idx, int max_n = 30) {
    const int n = 2 + idx % (max_n - 1);
    const double p = 0.1 + 0.2 * (idx / 7 % 5);
    return lapspec::generate_erdos_renyi(n, p, 1000003u * (idx + 1));
}

inline lapspec::Graph random_connected_graph(int idx, int max_n = 30) {
    for (int attempt = 0;; ++attempt) {
        const int n = 2 + idx % (max_n - 1);
        const double p = 0.25 + 0.15 * (idx / 5 % 5);
        auto g = lapspec::generate_erdos_renyi(
            n, p, 7700003u * (idx + 1) + 13u * attempt);
        if (lapspec::connected_components(g).count == 1) return g;
    }
}

// Closed forms for the per-class walk weight sums, written straight from the
// census quantities so the enumeration in the library is checked against an
// independent expression.
inline std::map<std::string, lapspec::Rational> closed_form_class_sums(
    const lapspec::StructuralCensus& c, int k) {
    using lapspec::Rational;
    const Rational n(c.n);
    const auto& S = c.S;
    std::map<std::string, Rational> out;
    if (k == 4) {
        out["node"] = Rational(S[3]) / n;
        out["edge"] = Rational(S[0] + 4 * S[2]) / n + Rational(4) * c.corr.C_dd;
        out["two_chain"] = Rational(2 * (S[1] - S[0])) / n;
        out["triangle"] = Rational(-8) * c.corr.C_dt;
        out["quadrangle"] = Rational(8 * c.Q) / n;
    } else if (k == 5) {
        out["node"] = Rational(S[4]) / n;
        out["edge"] = Rational(5 * (S[1] + S[3])) / n + Rational(10) * c.corr.C_d2d;
        out["two_chain"] = Rational(5 * (S[2] - 2 * S[1])) / n + Rational(10) * c.corr.C_dd;
        out["triangle"] = Rational(-30 * c.Delta) / n - Rational(10) * c.corr.C_d2t -
                          Rational(10) * c.corr.D_dd;
        out["quadrangle"] = Rational(10) * c.corr.C_dq;
        out["triangle_pendant"] = Rational(-10) * c.corr.C_dt + Rational(60 * c.Delta) / n;
        out["pentagon"] = Rational(-10 * c.P) / n;
    }
    return out;
}

}  // namespace testutil
