#pragma once

#include <optional>
#include <variant>

namespace polariton {

// Light-matter coupling conventions. All energies in meV (hbar = 1, so
// energy and angular frequency are interchangeable).
//
// Phonon:  Omega = g * sqrt(omega_0 / omega_c)
// Exciton: g_eff = omega_0 * sqrt(pi * chi / eps_inf),
//          Omega = omega_0 * sqrt(pi * chi * omega_0 / (omega_c * eps_inf))
// Plasmon: Omega = g, independent of omega_c
//
// g_effective is the phonon-convention coupling reproducing the same Omega;
// the sum/product spectral identities are written in it.
struct PhononCoupling {
    double g;
};
struct ExcitonCoupling {
    double chi;
    double eps_inf = 1.0;
};
struct PlasmonCoupling {
    double g;
};
using CouplingVariant = std::variant<PhononCoupling, ExcitonCoupling, PlasmonCoupling>;

struct SystemParams {
    double omega_c; // bare cavity energy, meV
    double omega_0; // bare matter excitation energy, meV
    CouplingVariant coupling;
    // Diamagnetic coefficient G in meV; nullopt means the default Omega^2/omega_0.
    std::optional<double> diamagnetic_override;
};

struct ResolvedCoupling {
    double Omega;       // bilinear coupling entering the Hamiltonian, meV
    double G;           // diamagnetic coefficient, meV
    double g_effective; // phonon-convention coupling, meV
    bool default_diamagnetic;
};

struct PolaritonSpectrum {
    double omega_plus;  // upper branch, meV
    double omega_minus; // lower branch, meV
    double theta;       // mixing angle, [0, pi]
    double Omega;
    double G;
};

// Validates omega_c, omega_0 > 0 and the variant fields (chi > 0, eps_inf >= 1,
// g >= 0 with 0 only as an explicit limit), resolves Omega, G, g_effective.
// Throws ParameterError.
ResolvedCoupling resolve_coupling(const SystemParams& params);

// Normal-mode frequencies of
//   H = omega_c(1/2 + a+a) + omega_0(1/2 + b+b) + Omega(a+ + a)(b+ + b) + G(a+ + a)^2.
// theta = pi/2 + atan2(omega_c(4G+omega_c) - omega_0^2, 4 Omega sqrt(omega_c omega_0)),
// which keeps the branch in (0, pi) for Omega > 0. Throws InstabilityError when
// omega_minus^2 <= 0 (reachable only through a diamagnetic override).
// Omega == 0 and G == 0 short-circuits to exact copies of the bare energies,
// with theta in {0, pi/2, pi} fixed by the ordering convention.
PolaritonSpectrum polariton_spectrum(const SystemParams& params);

// Max over both branches of the bulk-dispersion residual
//   |eps(omega) omega^2 - eps_inf omega_c^2| / (eps_inf omega_c^2),
//   eps(omega) = eps_inf (1 + 4 g_eff^2 / (omega_0^2 - omega^2)).
// A branch within 1e-12 relative of the omega_0 pole is evaluated through the
// factored polynomial (omega^2 - omega_c^2)(omega^2 - omega_0^2) - 4 g_eff^2 omega^2
// normalized by omega_c^2 omega_0^2. Both forms are exactly zero at g = 0.
// Meaningful only for the default diamagnetic coefficient.
double dielectric_dispersion_check(const SystemParams& params, const PolaritonSpectrum& spectrum);

} // namespace polariton
