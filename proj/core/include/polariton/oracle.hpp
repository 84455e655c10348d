#pragma once

#include "polariton/eig.hpp"
#include "polariton/hopfield.hpp"
#include "polariton/mat.hpp"

#include <cstddef>
#include <vector>

namespace polariton {

// Two-mode Fock basis truncated at occupation n_max per mode, ordered
// lexicographically with n_a major: index = n_a * (n_max + 1) + n_b.
struct FockTruncation {
    int n_max;
    std::size_t state_cap = 10000;

    std::size_t side() const { return static_cast<std::size_t>(n_max) + 1; }
    std::size_t dim() const { return side() * side(); }
    std::size_t index(int n_a, int n_b) const { return static_cast<std::size_t>(n_a) * side() + static_cast<std::size_t>(n_b); }

    // n_max >= 2 and dim() <= state_cap, else ConfigError.
    void validate() const;
};

struct NumericalGroundState {
    double energy; // meV, absolute (zero-point included)
    std::vector<double> amplitudes; // normalized, |0,0> amplitude positive
    // |E(n_max) - E(n_max - 4)| from a values-only solve of the nested
    // truncation (clamped at n_max = 0).
    double convergence_estimate;
    FockTruncation trunc;
};

// Real symmetric matrix of
//   omega_c(1/2 + a+a) + omega_0(1/2 + b+b) + Omega(a+ + a)(b+ + b) + G(a+ + a)^2
// in the truncated basis; respects a diamagnetic override.
DenseMatrix build_hamiltonian(const SystemParams& params, const FockTruncation& trunc);

// Lowest eigenpair of H. The Hamiltonian couples only states of equal
// (n_a + n_b) parity; when H decouples exactly (verified entrywise) each
// parity block is solved separately, roughly 4x cheaper than the full
// matrix. Arbitrary symmetric H falls back to the full solve.
NumericalGroundState ground_state_numeric(const DenseMatrix& h, const FockTruncation& trunc);

// Partial trace over the other mode; (n_max+1) x (n_max+1), trace 1.
DenseMatrix reduced_density_matrix(const NumericalGroundState& state, int mode);

// -sum lambda ln lambda over eigenvalues above 1e-14.
double entropy_numeric(const DenseMatrix& rho);

// log2 of the trace norm of the partial transpose of |psi><psi|,
//   rho_pt[(m,n),(m',n')] = psi(m,n') psi(m',n).
// The full matrix has dim() rows; n_max is capped at 40 (ConfigError).
double log_negativity_numeric(const NumericalGroundState& state);

// <a+a> of the cavity mode in the numerical ground state.
double photon_number_numeric(const NumericalGroundState& state);

// Quadrature covariance V_ij = <xi_i xi_j + xi_j xi_i>/2 in the ordering
// (x1, p1, x2, p2), from truncated ladder-operator matrices.
Mat4 covariance_numeric(const NumericalGroundState& state);

struct ConvergenceRow {
    int n_max;
    double energy;
    double entropy;
    double log_negativity;
};

// One full oracle evaluation per n_max; the list must be strictly ascending
// (ConfigError otherwise). Negativity cap applies to every entry.
std::vector<ConvergenceRow> convergence_sweep(const SystemParams& params, const std::vector<int>& n_max_list);

} // namespace polariton
