#include "lapspec/census.hpp"

#include <algorithm>

namespace lapspec {

std::vector<int128> power_sums(const Graph& g, int pmax) {
    if (pmax < 1) throw std::invalid_argument("power_sums requires pmax >= 1");
    std::vector<int128> s(pmax, 0);
    for (int d : g.degrees) {
        int128 acc = 1;
        for (int k = 0; k < pmax; ++k) {
            acc = checked_mul(acc, d);
            s[k] = checked_add(s[k], acc);
        }
    }
    return s;
}

int common_neighbors(const Graph& g, int i, int j) {
    if (i < 0 || i >= g.n || j < 0 || j >= g.n)
        throw std::invalid_argument("node id out of range");
    const auto& a = g.adjacency[i];
    const auto& b = g.adjacency[j];
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

CycleCensus cycle_census(const Graph& g) {
    CycleCensus cc;
    cc.t.assign(g.n, 0);
    cc.q.assign(g.n, 0);
    cc.p.assign(g.n, 0);

    // Triangles: ordered i < j < k with all three edges present.
    for (int i = 0; i < g.n; ++i) {
        for (int j : g.adjacency[i]) {
            if (j <= i) continue;
            for (int k : g.adjacency[j]) {
                if (k <= j || !g.has_edge(i, k)) continue;
                cc.Delta = checked_add(cc.Delta, 1);
                ++cc.t[i];
                ++cc.t[j];
                ++cc.t[k];
            }
        }
    }

    // Quadrangles a-b-c-d-a: a is the smallest node, direction fixed by b < d.
    for (int a = 0; a < g.n; ++a) {
        for (int b : g.adjacency[a]) {
            if (b <= a) continue;
            for (int c : g.adjacency[b]) {
                if (c <= a || c == b) continue;
                for (int d : g.adjacency[c]) {
                    if (d <= b || d == a || !g.has_edge(d, a)) continue;
                    cc.Q = checked_add(cc.Q, 1);
                    ++cc.q[a];
                    ++cc.q[b];
                    ++cc.q[c];
                    ++cc.q[d];
                }
            }
        }
    }

    // Pentagons a-b-c-d-e-a, same canonical form (a smallest, b < e).
    for (int a = 0; a < g.n; ++a) {
        for (int b : g.adjacency[a]) {
            if (b <= a) continue;
            for (int c : g.adjacency[b]) {
                if (c <= a || c == b) continue;
                for (int d : g.adjacency[c]) {
                    if (d <= a || d == b || d == c) continue;
                    for (int e : g.adjacency[d]) {
                        if (e <= b || e == c || !g.has_edge(e, a)) continue;
                        cc.P = checked_add(cc.P, 1);
                        ++cc.p[a];
                        ++cc.p[b];
                        ++cc.p[c];
                        ++cc.p[d];
                        ++cc.p[e];
                    }
                }
            }
        }
    }
    return cc;
}

CorrelationTerms correlation_terms(const Graph& g, const CycleCensus& cc) {
    int128 dd = 0, d2d = 0, dt = 0, d2t = 0, dq = 0, ddn = 0;
    for (auto [i, j] : g.edges) {
        int128 di = g.degrees[i], dj = g.degrees[j];
        int128 prod = checked_mul(di, dj);
        dd = checked_add(dd, prod);
        // ordered pairs (i,j) and (j,i): d_i^2 d_j + d_j^2 d_i = d_i d_j (d_i + d_j)
        d2d = checked_add(d2d, checked_mul(prod, checked_add(di, dj)));
        ddn = checked_add(ddn, checked_mul(prod, common_neighbors(g, i, j)));
    }
    for (int i = 0; i < g.n; ++i) {
        int128 di = g.degrees[i];
        dt = checked_add(dt, checked_mul(di, cc.t[i]));
        d2t = checked_add(d2t, checked_mul(checked_mul(di, di), cc.t[i]));
        dq = checked_add(dq, checked_mul(di, cc.q[i]));
    }
    CorrelationTerms c;
    c.C_dd = Rational(dd, g.n);
    c.C_d2d = Rational(d2d, checked_mul(2, g.n));
    c.C_dt = Rational(dt, g.n);
    c.C_d2t = Rational(d2t, g.n);
    c.C_dq = Rational(dq, g.n);
    c.D_dd = Rational(ddn, g.n);
    return c;
}

StructuralCensus full_census(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("census requires at least one node");
    StructuralCensus c;
    c.n = g.n;
    c.S = power_sums(g, 5);
    CycleCensus cc = cycle_census(g);
    c.corr = correlation_terms(g, cc);
    c.t = std::move(cc.t);
    c.q = std::move(cc.q);
    c.p = std::move(cc.p);
    c.Delta = cc.Delta;
    c.Q = cc.Q;
    c.P = cc.P;
    return c;
}

}  // namespace lapspec
