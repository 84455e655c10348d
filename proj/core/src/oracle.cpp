#include "polariton/oracle.hpp"

#include "polariton/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace polariton {

namespace {

int parity_of(std::size_t index, std::size_t side) {
    const std::size_t na = index / side;
    const std::size_t nb = index % side;
    return static_cast<int>((na + nb) % 2);
}

DenseMatrix extract(const DenseMatrix& h, const std::vector<std::size_t>& idx) {
    DenseMatrix out(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = h(idx[r], idx[c]);
    return out;
}

bool parity_decoupled(const DenseMatrix& h, std::size_t side) {
    for (std::size_t i = 0; i < h.n; ++i)
        for (std::size_t j = i + 1; j < h.n; ++j)
            if (parity_of(i, side) != parity_of(j, side) && (h(i, j) != 0.0 || h(j, i) != 0.0)) return false;
    return true;
}

// Lowest eigenvalue only, exploiting the parity split when it holds exactly.
double lowest_eigenvalue(const DenseMatrix& h, std::size_t side) {
    if (h.n == 1) return h(0, 0);
    if (parity_decoupled(h, side)) {
        std::vector<std::size_t> even, odd;
        for (std::size_t i = 0; i < h.n; ++i) (parity_of(i, side) == 0 ? even : odd).push_back(i);
        double best = jacobi_eigh(extract(h, even), EigenVectors::No).values.front();
        if (!odd.empty()) best = std::min(best, jacobi_eigh(extract(h, odd), EigenVectors::No).values.front());
        return best;
    }
    return jacobi_eigh(h, EigenVectors::No).values.front();
}

} // namespace

void FockTruncation::validate() const {
    if (n_max < 2) throw ConfigError("n_max must be >= 2");
    if (dim() > state_cap)
        throw ConfigError("truncated basis has " + std::to_string(dim()) + " states, cap is " +
                          std::to_string(state_cap));
}

DenseMatrix build_hamiltonian(const SystemParams& params, const FockTruncation& trunc) {
    trunc.validate();
    const ResolvedCoupling rc = resolve_coupling(params);
    const int n_max = trunc.n_max;

    DenseMatrix h(trunc.dim());
    for (int na = 0; na <= n_max; ++na) {
        for (int nb = 0; nb <= n_max; ++nb) {
            const std::size_t i = trunc.index(na, nb);
            h(i, i) = params.omega_c * (na + 0.5) + params.omega_0 * (nb + 0.5) + rc.G * (2.0 * na + 1.0);
            if (na + 1 <= n_max && nb + 1 <= n_max) {
                const std::size_t j = trunc.index(na + 1, nb + 1);
                h(i, j) = h(j, i) = rc.Omega * std::sqrt((na + 1.0) * (nb + 1.0));
            }
            if (na + 1 <= n_max && nb - 1 >= 0) {
                const std::size_t j = trunc.index(na + 1, nb - 1);
                h(i, j) = h(j, i) = rc.Omega * std::sqrt((na + 1.0) * nb);
            }
            if (na + 2 <= n_max) {
                const std::size_t j = trunc.index(na + 2, nb);
                h(i, j) = h(j, i) = rc.G * std::sqrt((na + 1.0) * (na + 2.0));
            }
        }
    }
    return h;
}

NumericalGroundState ground_state_numeric(const DenseMatrix& h, const FockTruncation& trunc) {
    trunc.validate();
    if (h.n != trunc.dim()) throw ParameterError("hamiltonian dimension does not match the truncation");
    const std::size_t side = trunc.side();

    double energy = 0.0;
    std::vector<double> amp(h.n, 0.0);

    if (parity_decoupled(h, side)) {
        std::vector<std::size_t> even, odd;
        for (std::size_t i = 0; i < h.n; ++i) (parity_of(i, side) == 0 ? even : odd).push_back(i);
        EigenDecomposition ee = jacobi_eigh(extract(h, even), EigenVectors::Yes);
        const double odd_min = jacobi_eigh(extract(h, odd), EigenVectors::No).values.front();
        if (odd_min < ee.values.front()) {
            // Not reachable for this Hamiltonian (the global ground state is
            // node-free and lives in the even sector), but h is caller-supplied.
            EigenDecomposition eo = jacobi_eigh(extract(h, odd), EigenVectors::Yes);
            energy = eo.values.front();
            for (std::size_t r = 0; r < odd.size(); ++r) amp[odd[r]] = eo.vectors(r, 0);
        } else {
            energy = ee.values.front();
            for (std::size_t r = 0; r < even.size(); ++r) amp[even[r]] = ee.vectors(r, 0);
        }
    } else {
        EigenDecomposition full = jacobi_eigh(h, EigenVectors::Yes);
        energy = full.values.front();
        for (std::size_t i = 0; i < h.n; ++i) amp[i] = full.vectors(i, 0);
    }

    double norm2 = 0.0;
    for (double x : amp) norm2 += x * x;
    const double inv_norm = 1.0 / std::sqrt(norm2);
    for (double& x : amp) x *= inv_norm;

    std::size_t anchor = 0; // |0,0> sits at index 0; fall back to the largest amplitude
    if (amp[0] == 0.0) {
        for (std::size_t i = 1; i < amp.size(); ++i)
            if (std::abs(amp[i]) > std::abs(amp[anchor])) anchor = i;
    }
    if (amp[anchor] < 0.0)
        for (double& x : amp) x = -x;

    // Energy at the nested truncation n_max - 4; entries of the smaller
    // Hamiltonian coincide with the corresponding entries of h.
    const int sub_n = std::max(trunc.n_max - 4, 0);
    std::vector<std::size_t> sub_idx;
    sub_idx.reserve(static_cast<std::size_t>(sub_n + 1) * static_cast<std::size_t>(sub_n + 1));
    for (int na = 0; na <= sub_n; ++na)
        for (int nb = 0; nb <= sub_n; ++nb) sub_idx.push_back(trunc.index(na, nb));
    const double sub_energy = lowest_eigenvalue(extract(h, sub_idx), static_cast<std::size_t>(sub_n) + 1);

    return {energy, std::move(amp), std::abs(energy - sub_energy), trunc};
}

DenseMatrix reduced_density_matrix(const NumericalGroundState& state, int mode) {
    if (mode != 1 && mode != 2) throw ParameterError("mode must be 1 or 2");
    const std::size_t side = state.trunc.side();
    DenseMatrix rho(side);
    for (std::size_t m = 0; m < side; ++m) {
        for (std::size_t mp = m; mp < side; ++mp) {
            double s = 0.0;
            for (std::size_t k = 0; k < side; ++k) {
                if (mode == 1)
                    s += state.amplitudes[m * side + k] * state.amplitudes[mp * side + k];
                else
                    s += state.amplitudes[k * side + m] * state.amplitudes[k * side + mp];
            }
            rho(m, mp) = rho(mp, m) = s;
        }
    }
    return rho;
}

double entropy_numeric(const DenseMatrix& rho) {
    const EigenDecomposition eig = jacobi_eigh(rho, EigenVectors::No);
    double s = 0.0;
    for (double lambda : eig.values)
        if (lambda > 1e-14) s -= lambda * std::log(lambda);
    return s;
}

double log_negativity_numeric(const NumericalGroundState& state) {
    const FockTruncation& trunc = state.trunc;
    if (trunc.n_max > 40) throw ConfigError("log negativity capped at n_max = 40 (partial transpose is dim^2)");
    const std::size_t side = trunc.side();
    const std::size_t dim = trunc.dim();

    const auto pt_entry = [&](std::size_t i, std::size_t j) {
        const std::size_t m = i / side, n = i % side;
        const std::size_t mp = j / side, np = j % side;
        return state.amplitudes[m * side + np] * state.amplitudes[mp * side + n];
    };

    // For a parity-pure state the partial transpose is block diagonal in the
    // same (n_a + n_b) parity partition as the Hamiltonian.
    double max_amp = 0.0, max_odd = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double a = std::abs(state.amplitudes[i]);
        max_amp = std::max(max_amp, a);
        if (parity_of(i, side) == 1) max_odd = std::max(max_odd, a);
    }

    double trace_norm = 0.0;
    if (max_odd <= 1e-14 * max_amp) {
        for (int sector = 0; sector < 2; ++sector) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < dim; ++i)
                if (parity_of(i, side) == sector) idx.push_back(i);
            DenseMatrix block(idx.size());
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (std::size_t c = r; c < idx.size(); ++c) block(r, c) = block(c, r) = pt_entry(idx[r], idx[c]);
            for (double lambda : jacobi_eigh(block, EigenVectors::No).values) trace_norm += std::abs(lambda);
        }
    } else {
        DenseMatrix pt(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j) pt(i, j) = pt(j, i) = pt_entry(i, j);
        for (double lambda : jacobi_eigh(pt, EigenVectors::No).values) trace_norm += std::abs(lambda);
    }
    return std::max(0.0, std::log2(trace_norm));
}

double photon_number_numeric(const NumericalGroundState& state) {
    const std::size_t side = state.trunc.side();
    double n = 0.0;
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i)
        n += static_cast<double>(i / side) * state.amplitudes[i] * state.amplitudes[i];
    return n;
}

Mat4 covariance_numeric(const NumericalGroundState& state) {
    const std::size_t side = state.trunc.side();
    const int n_max = state.trunc.n_max;
    using cd = std::complex<double>;

    // phi_k = xi_k |psi> with truncated ladder matrices; mixed x/p overlaps
    // then carry exactly zero real parts.
    std::vector<std::vector<cd>> phi(4, std::vector<cd>(state.amplitudes.size(), cd{0.0, 0.0}));
    const auto psi = [&](int na, int nb) { return state.amplitudes[static_cast<std::size_t>(na) * side + nb]; };

    for (int na = 0; na <= n_max; ++na) {
        for (int nb = 0; nb <= n_max; ++nb) {
            const std::size_t i = static_cast<std::size_t>(na) * side + nb;
            const double dn_a = std::sqrt(0.5 * na);
            const double up_a = na + 1 <= n_max ? std::sqrt(0.5 * (na + 1.0)) : 0.0;
            const double dn_b = std::sqrt(0.5 * nb);
            const double up_b = nb + 1 <= n_max ? std::sqrt(0.5 * (nb + 1.0)) : 0.0;

            const double x1 = (na > 0 ? dn_a * psi(na - 1, nb) : 0.0) + (na < n_max ? up_a * psi(na + 1, nb) : 0.0);
            const double p1 = (na > 0 ? dn_a * psi(na - 1, nb) : 0.0) - (na < n_max ? up_a * psi(na + 1, nb) : 0.0);
            const double x2 = (nb > 0 ? dn_b * psi(na, nb - 1) : 0.0) + (nb < n_max ? up_b * psi(na, nb + 1) : 0.0);
            const double p2 = (nb > 0 ? dn_b * psi(na, nb - 1) : 0.0) - (nb < n_max ? up_b * psi(na, nb + 1) : 0.0);

            phi[0][i] = cd{x1, 0.0};
            phi[1][i] = cd{0.0, p1};
            phi[2][i] = cd{x2, 0.0};
            phi[3][i] = cd{0.0, p2};
        }
    }

    Mat4 v;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = r; c < 4; ++c) {
            cd s{0.0, 0.0};
            for (std::size_t i = 0; i < phi[r].size(); ++i) s += std::conj(phi[r][i]) * phi[c][i];
            v(r, c) = v(c, r) = s.real();
        }
    }
    return v;
}

std::vector<ConvergenceRow> convergence_sweep(const SystemParams& params, const std::vector<int>& n_max_list) {
    if (n_max_list.empty()) throw ConfigError("n_max list is empty");
    for (std::size_t i = 1; i < n_max_list.size(); ++i)
        if (n_max_list[i] <= n_max_list[i - 1]) throw ConfigError("n_max list must be strictly ascending");

    std::vector<ConvergenceRow> rows;
    rows.reserve(n_max_list.size());
    for (int n : n_max_list) {
        const FockTruncation trunc{n};
        const NumericalGroundState gs = ground_state_numeric(build_hamiltonian(params, trunc), trunc);
        rows.push_back({n, gs.energy, entropy_numeric(reduced_density_matrix(gs, 1)), log_negativity_numeric(gs)});
    }
    return rows;
}

} // namespace polariton
