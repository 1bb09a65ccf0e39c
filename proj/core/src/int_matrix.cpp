#include "lapspec/int_matrix.hpp"

namespace lapspec {

IntMatrix IntMatrix::identity(int order) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("matrix order mismatch");
    IntMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            int128 aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                int128 b = o.at(k, j);
                if (b == 0) continue;
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, b));
            }
        }
    }
    return r;
}

int128 IntMatrix::trace() const {
    int128 t = 0;
    for (int i = 0; i < n; ++i) t = checked_add(t, at(i, i));
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.n);
    for (auto [i, j] : g.edges) {
        m.at(i, j) = 1;
        m.at(j, i) = 1;
    }
    return m;
}

IntMatrix laplacian_matrix(const Graph& g) {
    IntMatrix m(g.n);
    for (int i = 0; i < g.n; ++i) m.at(i, i) = g.degrees[i];
    for (auto [i, j] : g.edges) {
        m.at(i, j) = -1;
        m.at(j, i) = -1;
    }
    return m;
}

IntMatrix dense_matrix(const LaplacianGraph& lg) {
    IntMatrix m(lg.n);
    for (int i = 0; i < lg.n; ++i)
        for (auto [j, w] : lg.out[i]) m.at(i, j) = w;
    return m;
}

}  // namespace lapspec
