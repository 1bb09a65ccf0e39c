#include "lapspec/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace lapspec {

SymMatrix SymMatrix::from_dense(int order, const std::vector<double>& entries) {
    if (int(entries.size()) != order * order)
        throw std::invalid_argument("entry count does not match matrix order");
    double biggest = 0.0;
    for (double v : entries) biggest = std::max(biggest, std::abs(v));
    SymMatrix s(order);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            double x = entries[std::size_t(i) * order + j];
            double y = entries[std::size_t(j) * order + i];
            if (std::abs(x - y) > 1e-12 * std::max(1.0, biggest))
                throw std::invalid_argument("matrix is not symmetric");
            s.at(i, j) = 0.5 * (x + y);
        }
    }
    return s;
}

SymMatrix SymMatrix::from_int(const IntMatrix& m) {
    SymMatrix s(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) s.at(i, j) = double((long double)m.at(i, j));
    return s;
}

std::vector<double> sym_eigenvalues(SymMatrix s, double tol) {
    int n = s.n;
    if (n == 0) return {};
    double norm = 0.0;
    for (double v : s.a) norm += v * v;
    norm = std::sqrt(norm);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * s.at(p, q) * s.at(p, q);
        off = std::sqrt(off);
        if (off <= tol * norm || off == 0.0) {
            std::vector<double> eig(n);
            for (int i = 0; i < n; ++i) eig[i] = s.at(i, i);
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = s.at(p, q);
                if (apq == 0.0) continue;
                double app = s.at(p, p), aqq = s.at(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);  // avoids theta^2 overflow
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double sn = t * c;
                s.at(p, p) = app - t * apq;
                s.at(q, q) = aqq + t * apq;
                s.at(p, q) = 0.0;
                s.at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = s.at(i, p), aiq = s.at(i, q);
                    s.at(i, p) = c * aip - sn * aiq;
                    s.at(i, q) = sn * aip + c * aiq;
                    s.at(p, i) = s.at(i, p);
                    s.at(q, i) = s.at(i, q);
                }
            }
        }
    }
    throw std::runtime_error("jacobi eigensolver did not converge within 100 sweeps");
}

PsdResult ldlt_psd(const SymMatrix& s, double eps) {
    int n = s.n;
    PsdResult res;
    res.pivots.reserve(n);
    if (n == 0) {
        res.psd = true;
        return res;
    }
    std::vector<double> w = s.a;
    auto A = [&](int i, int j) -> double& { return w[std::size_t(i) * n + j]; };

    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += A(i, i);
    double eps_abs = eps * std::max(1.0, std::abs(tr));
    // a (near-)zero pivot is acceptable only if its whole row is (near-)zero
    double off_tol = 5.0 * eps_abs;

    for (int k = 0; k < n; ++k) {
        if (A(k, k) <= eps_abs) {
            int best = k;
            for (int j = k + 1; j < n; ++j)
                if (A(j, j) > A(best, best)) best = j;
            if (best != k) {
                for (int i = 0; i < n; ++i) std::swap(A(i, k), A(i, best));
                for (int j = 0; j < n; ++j) std::swap(A(k, j), A(best, j));
            }
        }
        double d = A(k, k);
        res.pivots.push_back(d);
        if (d > eps_abs) {
            for (int i = k + 1; i < n; ++i) {
                double l = A(i, k) / d;
                if (l == 0.0) continue;
                for (int j = k + 1; j < n; ++j) A(i, j) -= l * A(k, j);
            }
        } else if (d >= -eps_abs) {
            double worst = 0.0;
            for (int i = k + 1; i < n; ++i) worst = std::max(worst, std::abs(A(i, k)));
            if (worst > off_tol) {
                res.psd = false;
                return res;
            }
        } else {
            res.psd = false;
            return res;
        }
    }
    res.psd = true;
    return res;
}

int128 int_power_trace(const IntMatrix& m, int k) {
    if (k < 1) throw std::invalid_argument("power trace requires k >= 1");
    IntMatrix acc = m;
    for (int i = 1; i < k; ++i) acc = acc.mul(m);
    return acc.trace();
}

bool cholesky(const SymMatrix& s, std::vector<double>& lower) {
    int n = s.n;
    lower.assign(std::size_t(n) * n, 0.0);
    auto L = [&](int i, int j) -> double& { return lower[std::size_t(i) * n + j]; };
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(s.at(i, i)));
    for (int j = 0; j < n; ++j) {
        double d = s.at(j, j);
        for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (d <= 1e-12 * std::max(1.0, scale)) return false;
        L(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double v = s.at(i, j);
            for (int k = 0; k < j; ++k) v -= L(i, k) * L(j, k);
            L(i, j) = v / L(j, j);
        }
    }
    return true;
}

}  // namespace lapspec
