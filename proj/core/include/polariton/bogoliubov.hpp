#pragma once

#include "polariton/hopfield.hpp"
#include "polariton/mat.hpp"

namespace polariton {

// Canonical transformation to polariton normal modes, as a symplectic map of
// quadratures (x1, p1, x2, p2) -> (X-, P-, X+, P+).
struct TransformCoefficients {
    double mu;  // sqrt(omega_minus / omega_c)
    double nu;  // sqrt(omega_plus / omega_c)
    double theta;
    Mat4 matrix;
};

// Ground-state Gaussian wavefunction coefficients,
//   Psi_00 = pi^(-1/2) exp(-(a x1^2 + b x2^2 + 2 c x1 x2)/2),
// with ab = 1 + c^2 (purity) and c = sinh r.
struct GroundStateGaussian {
    double a;
    double b;
    double c;
    double r;        // asinh(c)
    double e_ground; // (omega_minus + omega_plus)/2, meV
};

// Assembles mu, nu and the 4x4 quadrature map. Exact degeneracy
// (omega_plus == omega_minus, only at g = 0 on resonance) returns the
// identity map by convention. Throws ParameterError on a non-default
// diamagnetic override: the coefficients below assume G = Omega^2/omega_0.
TransformCoefficients build_transform(const SystemParams& params, const PolaritonSpectrum& spectrum);

// a = mu^2 cos^2(theta/2) + nu^2 sin^2(theta/2), b the inverse-weighted
// counterpart, c = 2 Omega / (omega_plus + omega_minus). The half-angle
// squares are taken from (1 +- cos theta)/2 so the uncoupled limit gives
// a = b = 1 exactly. Same override restriction as build_transform.
GroundStateGaussian ground_state(const SystemParams& params, const PolaritonSpectrum& spectrum);

double wavefunction_00(const GroundStateGaussian& gs, double x1, double x2);

// One excitation in the lower / upper polariton mode:
//   Psi_10 = sqrt(2) (-mu cos(theta/2) x1 + sin(theta/2)/nu x2) Psi_00
//   Psi_01 = sqrt(2) ( nu sin(theta/2) x1 + cos(theta/2)/mu x2) Psi_00
double wavefunction_10(const GroundStateGaussian& gs, const TransformCoefficients& t, double x1, double x2);
double wavefunction_01(const GroundStateGaussian& gs, const TransformCoefficients& t, double x1, double x2);

// <a+a> in the ground state: (a + b)/4 - 1/2. Zero iff a = b = 1.
double virtual_photon_number(const GroundStateGaussian& gs);

} // namespace polariton
