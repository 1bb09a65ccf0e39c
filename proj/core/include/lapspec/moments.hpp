#pragma once
// Spectral moments of the graph Laplacian: closed forms from the structural
// census, the exact trace oracle, the spectral oracle, and nontrivial scaling.

#include "lapspec/census.hpp"
#include "lapspec/int_matrix.hpp"
#include "lapspec/rational.hpp"

#include <vector>

namespace lapspec {

struct MomentSequence {
    int n = 0;
    std::vector<Rational> m;  // m[k-1] = m_k = trace(L^k)/n

    int K() const { return int(m.size()); }

    // Nontrivial scaling m̄_k = n m_k / (n-1); undefined (throws) for n = 1.
    std::vector<Rational> scaled() const;
};

// Closed forms in the census quantities, K = 5. Exact rationals.
MomentSequence moments_structural(const StructuralCensus& c);

// m_k = trace(L^k)/n via exact integer matrix powers; the independent oracle.
MomentSequence moments_trace(const IntMatrix& L, int K);

// Floating moments of an explicit spectrum; for cross-validation only.
std::vector<double> moments_from_spectrum(const std::vector<double>& eigs, int K);

// Standalone form of MomentSequence::scaled for external sequences.
std::vector<Rational> scale_nontrivial(const MomentSequence& ms);

}  // namespace lapspec
