#include "lapspec/moments.hpp"

#include <cmath>

namespace lapspec {

std::vector<Rational> MomentSequence::scaled() const { return scale_nontrivial(*this); }

MomentSequence moments_structural(const StructuralCensus& c) {
    if (c.n < 1) throw std::invalid_argument("census over an empty node set");
    if (c.S.size() < 5) throw std::invalid_argument("census must carry S_1..S_5");
    const int128 n = c.n;
    const int128 S1 = c.S[0], S2 = c.S[1], S3 = c.S[2], S4 = c.S[3], S5 = c.S[4];
    const auto& corr = c.corr;

    MomentSequence ms;
    ms.n = c.n;
    ms.m.resize(5);
    ms.m[0] = Rational(S1, n);
    ms.m[1] = Rational(checked_add(S1, S2), n);
    ms.m[2] = Rational(checked_sub(checked_add(checked_mul(3, S2), S3), checked_mul(6, c.Delta)), n);

    // m4 = (-S1 + 2 S2 + 4 S3 + S4 + 8 Q)/n + 4 C_dd - 8 C_dt
    int128 m4_int = checked_add(
        checked_add(checked_sub(checked_mul(2, S2), S1), checked_mul(4, S3)),
        checked_add(S4, checked_mul(8, c.Q)));
    ms.m[3] = Rational(m4_int, n) + Rational(4) * corr.C_dd - Rational(8) * corr.C_dt;

    // m5 = (-5 S2 + 5 S3 + 5 S4 + S5 + 30 Delta - 10 P)/n
    //      + 10 (C_dd + C_d2d - C_dt - C_d2t + C_dq - D_dd)
    int128 m5_int = checked_add(
        checked_add(checked_mul(5, checked_sub(checked_add(S3, S4), S2)), S5),
        checked_sub(checked_mul(30, c.Delta), checked_mul(10, c.P)));
    Rational corr5 = corr.C_dd + corr.C_d2d - corr.C_dt - corr.C_d2t + corr.C_dq - corr.D_dd;
    ms.m[4] = Rational(m5_int, n) + Rational(10) * corr5;
    return ms;
}

MomentSequence moments_trace(const IntMatrix& L, int K) {
    if (K < 1) throw std::invalid_argument("moment order must be >= 1");
    if (L.n < 1) throw std::invalid_argument("empty matrix");
    if (!L.is_symmetric()) throw std::invalid_argument("trace moments expect a symmetric matrix");
    MomentSequence ms;
    ms.n = L.n;
    ms.m.reserve(K);
    IntMatrix acc = L;
    for (int k = 1; k <= K; ++k) {
        if (k > 1) acc = acc.mul(L);
        ms.m.emplace_back(acc.trace(), L.n);
    }
    return ms;
}

std::vector<double> moments_from_spectrum(const std::vector<double>& eigs, int K) {
    if (K < 1) throw std::invalid_argument("moment order must be >= 1");
    if (eigs.empty()) throw std::invalid_argument("empty spectrum");
    std::vector<double> m(K, 0.0);
    for (double lambda : eigs) {
        double acc = 1.0;
        for (int k = 0; k < K; ++k) {
            acc *= lambda;
            m[k] += acc;
        }
    }
    for (double& v : m) v /= double(eigs.size());
    return m;
}

std::vector<Rational> scale_nontrivial(const MomentSequence& ms) {
    if (ms.n < 2)
        throw std::domain_error("nontrivial moments are undefined for a single-node graph");
    Rational f(ms.n, ms.n - 1);
    std::vector<Rational> scaled;
    scaled.reserve(ms.m.size());
    for (const Rational& mk : ms.m) scaled.push_back(f * mk);
    return scaled;
}

}  // namespace lapspec
