#include "polariton/sweep.hpp"

#include "polariton/bogoliubov.hpp"
#include "polariton/entanglement.hpp"
#include "polariton/errors.hpp"
#include "polariton/format.hpp"
#include "polariton/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace polariton {

namespace {

// Rebuild the coupling for a swept variant-convention g value.
CouplingVariant coupling_for(const CouplingVariant& base, double g, double omega_0) {
    if (std::holds_alternative<PlasmonCoupling>(base)) return PlasmonCoupling{g};
    if (const auto* ex = std::get_if<ExcitonCoupling>(&base)) {
        const double ratio = g / omega_0;
        return ExcitonCoupling{ex->eps_inf * ratio * ratio / std::numbers::pi, ex->eps_inf};
    }
    return PhononCoupling{g};
}

// The variant-convention coupling of the base parameters, for the single
// default curve and the g_meV column.
double coupling_g(const CouplingVariant& v, double omega_0) {
    if (const auto* ph = std::get_if<PhononCoupling>(&v)) return ph->g;
    if (const auto* pl = std::get_if<PlasmonCoupling>(&v)) return pl->g;
    const auto& ex = std::get<ExcitonCoupling>(v);
    return omega_0 * std::sqrt(std::numbers::pi * ex.chi / ex.eps_inf);
}

SweepRow evaluate(const SystemParams& params, double g_column) {
    const PolaritonSpectrum spec = polariton_spectrum(params);
    const GroundStateGaussian gs = ground_state(params, spec);
    const EntanglementReport rep = entanglement_report(gs, covariance_from_ground_state(gs));
    return {params.omega_c, g_column, spec.omega_plus, spec.omega_minus, gs.c, rep.entropy_over_kB,
            rep.log_negativity};
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.points < 2 || spec.points > 100000) throw ConfigError("points must be in [2, 100000]");
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop) || !(spec.start < spec.stop))
        throw ConfigError("sweep requires start < stop");
    if (spec.axis == SweepAxis::OmegaC && !(spec.start > 0.0))
        throw ConfigError("omega_c sweep requires start > 0");
    if (spec.axis == SweepAxis::G && !(spec.start >= 0.0)) throw ConfigError("g sweep requires start >= 0");
    if (spec.axis == SweepAxis::G && !spec.g_values.empty())
        throw ConfigError("g_values applies only to the omega_c axis");

    std::vector<double> curves = spec.g_values;
    if (spec.axis == SweepAxis::OmegaC && curves.empty())
        curves.push_back(coupling_g(spec.base.coupling, spec.base.omega_0));

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.points) * std::max<std::size_t>(curves.size(), 1));
    for (int i = 0; i < spec.points; ++i) {
        const double x = i == spec.points - 1
                             ? spec.stop
                             : spec.start + (spec.stop - spec.start) * i / (spec.points - 1);
        SystemParams params = spec.base;
        if (spec.axis == SweepAxis::G) {
            params.coupling = coupling_for(spec.base.coupling, x, spec.base.omega_0);
            rows.push_back(evaluate(params, x));
        } else {
            params.omega_c = x;
            for (double g : curves) {
                params.coupling = coupling_for(spec.base.coupling, g, spec.base.omega_0);
                rows.push_back(evaluate(params, g));
            }
        }
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "omega_c_meV,g_meV,omega_plus_meV,omega_minus_meV,c,entropy_over_kB,log_negativity\n";
    for (const SweepRow& r : rows) {
        out << sci12(r.omega_c) << ',' << sci12(r.g) << ',' << sci12(r.omega_plus) << ',' << sci12(r.omega_minus)
            << ',' << sci12(r.c) << ',' << sci12(r.entropy_over_kB) << ',' << sci12(r.log_negativity) << "\n";
    }
}

} // namespace polariton
