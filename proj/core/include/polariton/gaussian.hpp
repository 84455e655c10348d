#pragma once

#include "polariton/bogoliubov.hpp"
#include "polariton/mat.hpp"

namespace polariton {

// 4x4 quadrature covariance in ordering (x1, p1, x2, p2),
// V = [[A, C], [C^T, B]]. The ordering is part of the public contract.
struct CovarianceMatrix {
    Mat4 v;

    Mat2 block_a() const { return {v(0, 0), v(0, 1), v(1, 0), v(1, 1)}; }
    Mat2 block_b() const { return {v(2, 2), v(2, 3), v(3, 2), v(3, 3)}; }
    Mat2 block_c() const { return {v(0, 2), v(0, 3), v(1, 2), v(1, 3)}; }

    // Validates symmetry, positive definiteness (Cholesky) and the
    // uncertainty bound nu_- >= 1/2 - 1e-12 on the symplectic spectrum.
    // Throws NumericalError.
    static CovarianceMatrix from_matrix(const Mat4& v);
};

struct SymplecticInvariants {
    double det_a;
    double det_b;
    double det_c;
    double det_v;
    double delta_tilde; // det_a + det_b - 2 det_c
};

// Single-mode reduced Gaussian state: alpha = <p^2>, beta = <x^2>,
// gamma = <xp + px>/2.
struct SingleModeWigner {
    double alpha;
    double beta;
    double gamma;

    // W(x, p) = (2 pi sqrt(alpha beta - gamma^2))^-1
    //           * exp(-(alpha x^2 + beta p^2 - 2 gamma x p) / (2(alpha beta - gamma^2)))
    double value(double x, double p) const;

    // Thermal-like parameter sqrt(alpha beta - gamma^2) - 1/2; zero for a
    // pure single-mode state.
    double sigma() const;
};

// A = diag(b/2, a/2), B = diag(a/2, b/2), C = diag(-c/2, c/2).
CovarianceMatrix covariance_from_ground_state(const GroundStateGaussian& gs);

// mode is 1 or 2; anything else throws ParameterError.
SingleModeWigner reduced_wigner(int mode, const CovarianceMatrix& cov);

SymplecticInvariants symplectic_invariants(const CovarianceMatrix& cov);

// Partial-transpose symplectic eigenvalues,
//   nu_tilde_-+ = sqrt((delta_tilde -+ sqrt(delta_tilde^2 - 4 det V))/2),
// nu_minus <= nu_plus, nu_minus * nu_plus = sqrt(det V). A slightly negative
// radicand (rounding on near-degenerate input) is clamped at zero; a negative
// radicand beyond rounding slack throws NumericalError.
struct PtSymplecticPair {
    double minus;
    double plus;
};
PtSymplecticPair ppt_symplectic_eigenvalues(const CovarianceMatrix& cov);

// The entanglement-deciding eigenvalue alone: entangled iff < 1/2.
double ppt_symplectic_eigenvalue(const CovarianceMatrix& cov);

} // namespace polariton
