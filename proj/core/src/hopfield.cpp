#include "polariton/hopfield.hpp"

#include "polariton/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polariton {

namespace {

void require_finite_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) throw ParameterError(std::string(name) + " must be finite and > 0");
}

} // namespace

ResolvedCoupling resolve_coupling(const SystemParams& params) {
    require_finite_positive(params.omega_c, "omega_c");
    require_finite_positive(params.omega_0, "omega_0");

    const double wc = params.omega_c;
    const double w0 = params.omega_0;

    double Omega = 0.0;
    double g_eff = 0.0;
    if (const auto* ph = std::get_if<PhononCoupling>(&params.coupling)) {
        if (!std::isfinite(ph->g) || ph->g < 0.0) throw ParameterError("phonon g must be finite and >= 0");
        g_eff = ph->g;
        Omega = ph->g * std::sqrt(w0 / wc);
    } else if (const auto* ex = std::get_if<ExcitonCoupling>(&params.coupling)) {
        if (!std::isfinite(ex->chi) || ex->chi < 0.0) throw ParameterError("exciton chi must be finite and >= 0");
        if (!std::isfinite(ex->eps_inf) || ex->eps_inf < 1.0) throw ParameterError("eps_inf must be finite and >= 1");
        g_eff = w0 * std::sqrt(std::numbers::pi * ex->chi / ex->eps_inf);
        Omega = w0 * std::sqrt(std::numbers::pi * ex->chi * w0 / (wc * ex->eps_inf));
    } else {
        const auto& pl = std::get<PlasmonCoupling>(params.coupling);
        if (!std::isfinite(pl.g) || pl.g < 0.0) throw ParameterError("plasmon g must be finite and >= 0");
        Omega = pl.g;
        g_eff = pl.g * std::sqrt(wc / w0);
    }

    const double g_default = Omega * Omega / w0;
    double G = g_default;
    bool is_default = true;
    if (params.diamagnetic_override) {
        if (!std::isfinite(*params.diamagnetic_override)) throw ParameterError("diamagnetic override must be finite");
        G = *params.diamagnetic_override;
        is_default = (G == g_default);
    }
    return {Omega, G, g_eff, is_default};
}

PolaritonSpectrum polariton_spectrum(const SystemParams& params) {
    const ResolvedCoupling rc = resolve_coupling(params);
    const double wc = params.omega_c;
    const double w0 = params.omega_0;

    if (rc.Omega == 0.0 && rc.G == 0.0) {
        // Uncoupled oscillators: exact copies of the bare energies. theta by
        // ordering convention; resonance keeps the atan2(0, 0) = 0 midpoint
        // value pi/2.
        double theta = std::numbers::pi / 2.0;
        if (wc < w0) theta = 0.0;
        else if (wc > w0) theta = std::numbers::pi;
        return {std::max(wc, w0), std::min(wc, w0), theta, rc.Omega, rc.G};
    }

    const double num = wc * (4.0 * rc.G + wc) - w0 * w0;
    const double den = 4.0 * rc.Omega * std::sqrt(wc * w0);
    const double r = std::hypot(num, den);
    const double theta = std::numbers::pi / 2.0 + std::atan2(num, den);

    // r + num evaluated without cancellation: (r + num)(r - num) = den^2.
    double r_plus_num;
    if (r == 0.0) {
        r_plus_num = 0.0;
    } else if (num >= 0.0) {
        r_plus_num = r + num;
    } else {
        r_plus_num = den * den / (r - num);
    }

    const double wp2 = w0 * w0 + 0.5 * r_plus_num;

    // omega_+^2 omega_-^2 from the quartic's constant term; collapses to
    // (omega_c omega_0)^2 for the default diamagnetic coefficient, which keeps
    // the product identity exact to rounding.
    double prod2;
    if (rc.default_diamagnetic) {
        const double p = wc * w0;
        prod2 = p * p;
    } else {
        prod2 = w0 * w0 * wc * wc + 4.0 * w0 * wc * (w0 * rc.G - rc.Omega * rc.Omega);
    }
    if (prod2 <= 0.0)
        throw InstabilityError("lower branch frequency squared <= 0: Hamiltonian unbounded below");

    const double wm2 = prod2 / wp2;
    return {std::sqrt(wp2), std::sqrt(wm2), theta, rc.Omega, rc.G};
}

double dielectric_dispersion_check(const SystemParams& params, const PolaritonSpectrum& spectrum) {
    const ResolvedCoupling rc = resolve_coupling(params);
    const double wc2 = params.omega_c * params.omega_c;
    const double w02 = params.omega_0 * params.omega_0;
    const double g2 = rc.g_effective * rc.g_effective;

    const auto residual = [&](double w) {
        const double w2 = w * w;
        const double denom = w02 - w2;
        if (std::abs(denom) <= 1e-12 * w02) {
            const double poly = (w2 - wc2) * (w2 - w02) - 4.0 * g2 * w2;
            return std::abs(poly) / (wc2 * w02);
        }
        return std::abs(w2 + 4.0 * g2 * w2 / denom - wc2) / wc2;
    };

    return std::max(residual(spectrum.omega_plus), residual(spectrum.omega_minus));
}

} // namespace polariton
