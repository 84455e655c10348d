#include "polariton/bogoliubov.hpp"

#include "polariton/errors.hpp"

#include <cmath>
#include <numbers>

namespace polariton {

namespace {

void require_default_diamagnetic(const SystemParams& params) {
    // a, b, c and the quadrature map are derived assuming G = Omega^2/omega_0;
    // with any other G they would violate their own invariants (ab = 1 + c^2,
    // symplecticity), so refuse instead of returning wrong coefficients.
    if (!resolve_coupling(params).default_diamagnetic)
        throw ParameterError("ground-state coefficients require the default diamagnetic coefficient");
}

} // namespace

TransformCoefficients build_transform(const SystemParams& params, const PolaritonSpectrum& spectrum) {
    require_default_diamagnetic(params);
    const double mu = std::sqrt(spectrum.omega_minus / params.omega_c);
    const double nu = std::sqrt(spectrum.omega_plus / params.omega_c);

    if (spectrum.omega_plus == spectrum.omega_minus)
        return {mu, nu, spectrum.theta, Mat4::identity()};

    const double ch = std::cos(0.5 * spectrum.theta);
    const double sh = std::sin(0.5 * spectrum.theta);
    Mat4 t;
    t(0, 0) = -ch * mu;
    t(0, 2) = sh / nu;
    t(1, 1) = -ch / mu;
    t(1, 3) = sh * nu;
    t(2, 0) = sh * nu;
    t(2, 2) = ch / mu;
    t(3, 1) = sh / nu;
    t(3, 3) = ch * mu;
    return {mu, nu, spectrum.theta, t};
}

GroundStateGaussian ground_state(const SystemParams& params, const PolaritonSpectrum& spectrum) {
    require_default_diamagnetic(params);

    const double e_ground = 0.5 * (spectrum.omega_plus + spectrum.omega_minus);
    if (spectrum.omega_plus == spectrum.omega_minus)
        return {1.0, 1.0, 0.0, 0.0, e_ground};

    // cos^2(theta/2), sin^2(theta/2) through the half-angle identities: for
    // the uncoupled limits (theta exactly 0 or pi, branch ratios exactly 1)
    // this yields a = b = 1 with no rounding residue.
    const double cth = std::cos(spectrum.theta);
    const double c2 = 0.5 * (1.0 + cth);
    const double s2 = 0.5 * (1.0 - cth);
    const double mu2 = spectrum.omega_minus / params.omega_c;
    const double nu2 = spectrum.omega_plus / params.omega_c;

    const double a = mu2 * c2 + nu2 * s2;
    const double b = c2 / mu2 + s2 / nu2;
    const double c = 2.0 * spectrum.Omega / (spectrum.omega_plus + spectrum.omega_minus);
    return {a, b, c, std::asinh(c), e_ground};
}

double wavefunction_00(const GroundStateGaussian& gs, double x1, double x2) {
    return std::numbers::inv_sqrtpi *
           std::exp(-0.5 * (gs.a * x1 * x1 + gs.b * x2 * x2 + 2.0 * gs.c * x1 * x2));
}

double wavefunction_10(const GroundStateGaussian& gs, const TransformCoefficients& t, double x1, double x2) {
    const double ch = std::cos(0.5 * t.theta);
    const double sh = std::sin(0.5 * t.theta);
    return std::numbers::sqrt2 * (-t.mu * ch * x1 + sh / t.nu * x2) * wavefunction_00(gs, x1, x2);
}

double wavefunction_01(const GroundStateGaussian& gs, const TransformCoefficients& t, double x1, double x2) {
    const double ch = std::cos(0.5 * t.theta);
    const double sh = std::sin(0.5 * t.theta);
    return std::numbers::sqrt2 * (t.nu * sh * x1 + ch / t.mu * x2) * wavefunction_00(gs, x1, x2);
}

double virtual_photon_number(const GroundStateGaussian& gs) {
    return 0.25 * (gs.a + gs.b) - 0.5;
}

} // namespace polariton
