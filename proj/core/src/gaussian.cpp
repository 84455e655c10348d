#include "polariton/gaussian.hpp"

#include "polariton/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polariton {

namespace {

double det4(const Mat4& m) {
    // Cofactor expansion along the first row via 3x3 minors.
    const auto minor3 = [&](std::size_t r0, std::size_t r1, std::size_t r2, std::size_t c0, std::size_t c1,
                            std::size_t c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
               m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
               m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * minor3(1, 2, 3, 1, 2, 3) - m(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * minor3(1, 2, 3, 0, 1, 3) - m(0, 3) * minor3(1, 2, 3, 0, 1, 2);
}

double clamped_radicand(double delta, double det_v) {
    double rad = delta * delta - 4.0 * det_v;
    if (rad < 0.0) {
        if (rad < -1e-10 * std::max(1.0, delta * delta))
            throw NumericalError("symplectic radicand negative beyond rounding slack");
        rad = 0.0;
    }
    return rad;
}

} // namespace

CovarianceMatrix CovarianceMatrix::from_matrix(const Mat4& v) {
    double max_abs = 0.0;
    for (double x : v.m) max_abs = std::max(max_abs, std::abs(x));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = r + 1; c < 4; ++c)
            if (std::abs(v(r, c) - v(c, r)) > 1e-12 * (1.0 + max_abs))
                throw NumericalError("covariance matrix not symmetric");

    // Cholesky as the positive-definiteness probe.
    Mat4 l;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = v(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0) throw NumericalError("covariance matrix not positive definite");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }

    CovarianceMatrix cov{v};
    // Uncertainty bound nu_minus >= 1/2 on the plain (untransposed)
    // symplectic spectrum, with delta using +2 det C. Evaluated without the
    // radical: for a pure state the radicand is rounding noise and the
    // square root would turn one ulp into ~1e-8 of spurious violation.
    // nu_minus >= 1/2 is equivalent to the pair of polynomial conditions
    // delta >= 1/2 and delta <= 1/4 + 4 det V, since
    // delta - 1/4 - 4 det V = (nu_plus^2 - 1/4)(1 - 4 nu_minus^2).
    const Mat2 a = cov.block_a();
    const Mat2 b = cov.block_b();
    const Mat2 c = cov.block_c();
    const double delta = a.det() + b.det() + 2.0 * c.det();
    const double scale = 1.0 + max_abs * max_abs;
    if (delta < 0.5 - 1e-12 * scale || delta - (0.25 + 4.0 * det4(v)) > 1e-11 * scale * scale)
        throw NumericalError("covariance matrix violates the uncertainty relation");
    return cov;
}

double SingleModeWigner::value(double x, double p) const {
    const double s = alpha * beta - gamma * gamma;
    return std::exp(-0.5 * (alpha * x * x + beta * p * p - 2.0 * gamma * x * p) / s) /
           (2.0 * std::numbers::pi * std::sqrt(s));
}

double SingleModeWigner::sigma() const {
    return std::sqrt(alpha * beta - gamma * gamma) - 0.5;
}

CovarianceMatrix covariance_from_ground_state(const GroundStateGaussian& gs) {
    Mat4 v;
    v(0, 0) = 0.5 * gs.b;
    v(1, 1) = 0.5 * gs.a;
    v(2, 2) = 0.5 * gs.a;
    v(3, 3) = 0.5 * gs.b;
    v(0, 2) = v(2, 0) = -0.5 * gs.c;
    v(1, 3) = v(3, 1) = 0.5 * gs.c;
    return CovarianceMatrix{v};
}

SingleModeWigner reduced_wigner(int mode, const CovarianceMatrix& cov) {
    if (mode != 1 && mode != 2) throw ParameterError("mode must be 1 or 2");
    const std::size_t x = mode == 1 ? 0 : 2;
    const std::size_t p = x + 1;
    return {cov.v(p, p), cov.v(x, x), 0.5 * (cov.v(x, p) + cov.v(p, x))};
}

SymplecticInvariants symplectic_invariants(const CovarianceMatrix& cov) {
    const double det_a = cov.block_a().det();
    const double det_b = cov.block_b().det();
    const double det_c = cov.block_c().det();
    return {det_a, det_b, det_c, det4(cov.v), det_a + det_b - 2.0 * det_c};
}

PtSymplecticPair ppt_symplectic_eigenvalues(const CovarianceMatrix& cov) {
    const SymplecticInvariants inv = symplectic_invariants(cov);
    const double s = std::sqrt(clamped_radicand(inv.delta_tilde, inv.det_v));
    const double minus = std::sqrt(std::max(0.0, 0.5 * (inv.delta_tilde - s)));
    const double plus = std::sqrt(0.5 * (inv.delta_tilde + s));
    return {minus, plus};
}

double ppt_symplectic_eigenvalue(const CovarianceMatrix& cov) {
    return ppt_symplectic_eigenvalues(cov).minus;
}

} // namespace polariton
