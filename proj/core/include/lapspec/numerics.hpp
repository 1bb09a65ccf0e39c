#pragma once
// Small dense symmetric kernels: Jacobi eigenvalues, an LDL^T positive
// semidefiniteness test, and exact integer power traces.

#include "lapspec/int_matrix.hpp"

#include <vector>

namespace lapspec {

struct SymMatrix {
    int n = 0;
    std::vector<double> a;  // row-major, kept exactly symmetric

    SymMatrix() = default;
    explicit SymMatrix(int order) : n(order), a(std::size_t(order) * order, 0.0) {}

    double& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    const double& at(int i, int j) const { return a[std::size_t(i) * n + j]; }

    // Symmetrizes by averaging; rejects inputs whose asymmetry exceeds
    // 1e-12 relative to the largest entry.
    static SymMatrix from_dense(int order, const std::vector<double>& entries);
    static SymMatrix from_int(const IntMatrix& m);

    void set_sym(int i, int j, double v) {
        at(i, j) = v;
        at(j, i) = v;
    }
};

// Cyclic Jacobi sweeps until the off-diagonal mass is negligible; ascending.
// Throws on non-convergence after 100 sweeps.
std::vector<double> sym_eigenvalues(SymMatrix s, double tol = 1e-14);

struct PsdResult {
    bool psd = false;
    std::vector<double> pivots;  // in elimination order
};

// LDL^T with diagonal pivoting. Passes iff every pivot >= -eps * scale where
// scale = max(1, |trace|); zero pivots (boundary of the cone) pass provided
// the rest of their row vanishes too.
PsdResult ldlt_psd(const SymMatrix& s, double eps = 1e-10);

// trace(M^k) in checked 128-bit arithmetic.
int128 int_power_trace(const IntMatrix& m, int k);

// Lower-triangular Cholesky factor; false when the matrix is not numerically
// positive definite. Used by the generalized-eigenvalue cross-check.
bool cholesky(const SymMatrix& s, std::vector<double>& lower);

}  // namespace lapspec
