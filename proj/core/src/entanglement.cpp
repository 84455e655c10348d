#include "polariton/entanglement.hpp"

#include "polariton/errors.hpp"

#include <cmath>
#include <numbers>

namespace polariton {

double entropy_from_sigma(double sigma) {
    if (!(sigma >= 0.0)) throw ParameterError("sigma must be >= 0");
    if (sigma == 0.0) return 0.0;
    if (sigma < 1e-6) return sigma * (1.0 - std::log(sigma)) + 0.5 * sigma * sigma;
    return (sigma + 1.0) * std::log1p(sigma) - sigma * std::log(sigma);
}

double entropy_from_c_closed_form(double c) {
    if (!(c > 0.0)) throw ParameterError("closed form requires c > 0");
    const double x = std::sqrt(c * c + 1.0);
    return x * std::log((x + 1.0) / c) + std::log(0.5 * c);
}

EntanglementReport entanglement_report(const GroundStateGaussian& gs, const CovarianceMatrix& cov) {
    const double c = gs.c;
    // (sqrt(c^2+1) - 1)/2 without the subtraction.
    const double sigma = c * c / (2.0 * (1.0 + std::sqrt(1.0 + c * c)));

    // Both reduced states must carry the same sigma; a mismatch means gs and
    // cov describe different states.
    for (int mode : {1, 2}) {
        const double sw = reduced_wigner(mode, cov).sigma();
        if (std::abs(sw - sigma) > 1e-10 * (1.0 + sigma))
            throw NumericalError("reduced-state sigma disagrees with the wavefunction coefficients");
    }

    const double nu_tilde_minus = 0.5 / (std::sqrt(1.0 + c * c) + c); // = e^-r / 2
    const double log_negativity = std::max(0.0, gs.r / std::numbers::ln2); // = -log2(2 nu_tilde_minus)
    return {sigma, entropy_from_sigma(sigma), gs.r, nu_tilde_minus, log_negativity, virtual_photon_number(gs)};
}

} // namespace polariton
