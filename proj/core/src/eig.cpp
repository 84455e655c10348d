#include "polariton/eig.hpp"

#include "polariton/errors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

namespace polariton {

namespace {

inline void rotate(DenseMatrix& a, std::size_t i, std::size_t j, std::size_t k, std::size_t l, double s, double tau) {
    const double g = a(i, j);
    const double h = a(k, l);
    a(i, j) = g - s * (h + g * tau);
    a(k, l) = h + s * (g - h * tau);
}

} // namespace

EigenDecomposition jacobi_eigh(const DenseMatrix& m, EigenVectors want_vectors) {
    const std::size_t n = m.n;
    EigenDecomposition out;
    if (n == 0) return out;

    DenseMatrix a = m;
    DenseMatrix v;
    const bool vecs = want_vectors == EigenVectors::Yes;
    if (vecs) {
        v = DenseMatrix(n);
        for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
    }

    std::vector<double> d(n), b(n), z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = b[i] = a(i, i);

    int sweep = 0;
    for (sweep = 1; sweep <= 100; ++sweep) {
        double sm = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) sm += std::abs(a(p, q));
        if (sm == 0.0) break;

        const double tresh = sweep < 4 ? 0.2 * sm / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = 100.0 * std::abs(a(p, q));
                // Flush elements that can no longer move the diagonal.
                if (sweep > 4 && g <= DBL_EPSILON * std::abs(d[p]) && g <= DBL_EPSILON * std::abs(d[q])) {
                    a(p, q) = 0.0;
                } else if (std::abs(a(p, q)) > tresh) {
                    double h = d[q] - d[p];
                    double t;
                    if (g <= DBL_EPSILON * std::abs(h)) {
                        t = a(p, q) / h;
                    } else {
                        const double theta = 0.5 * h / a(p, q);
                        t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    h = t * a(p, q);
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a(p, q) = 0.0;
                    for (std::size_t j = 0; j < p; ++j) rotate(a, j, p, j, q, s, tau);
                    for (std::size_t j = p + 1; j < q; ++j) rotate(a, p, j, j, q, s, tau);
                    for (std::size_t j = q + 1; j < n; ++j) rotate(a, p, j, q, j, s, tau);
                    if (vecs)
                        for (std::size_t j = 0; j < n; ++j) rotate(v, j, p, j, q, s, tau);
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if (sweep > 100) throw NumericalError("jacobi_eigh: no convergence within 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.values[k] = d[order[k]];
    if (vecs) {
        out.vectors = DenseMatrix(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    out.sweeps = sweep;
    return out;
}

} // namespace polariton
