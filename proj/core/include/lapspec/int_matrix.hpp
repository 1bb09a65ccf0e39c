#pragma once
// Dense integer matrices in checked 128-bit arithmetic.

#include "lapspec/checked_int.hpp"
#include "lapspec/graph.hpp"

#include <vector>

namespace lapspec {

struct IntMatrix {
    int n = 0;
    std::vector<int128> a;  // row-major

    IntMatrix() = default;
    explicit IntMatrix(int order) : n(order), a(std::size_t(order) * order, 0) {}

    int128& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    const int128& at(int i, int j) const { return a[std::size_t(i) * n + j]; }

    static IntMatrix identity(int order);

    IntMatrix mul(const IntMatrix& o) const;  // checked throughout
    int128 trace() const;
    bool is_symmetric() const;
};

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix laplacian_matrix(const Graph& g);

// Dense form of the weighted loopy graph; equals laplacian_matrix(g) when
// lg = laplacian_graph(g).
IntMatrix dense_matrix(const LaplacianGraph& lg);

}  // namespace lapspec
