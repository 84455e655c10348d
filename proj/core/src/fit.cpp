#include "polariton/fit.hpp"

#include "polariton/bogoliubov.hpp"
#include "polariton/entanglement.hpp"
#include "polariton/errors.hpp"
#include "polariton/format.hpp"
#include "polariton/gaussian.hpp"
#include "polariton/hopfield.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <utility>

namespace polariton {

namespace {

struct CoreInversion {
    double omega_c;
    double g_pe; // phonon-convention coupling
    double Omega;
    double c;
};

CoreInversion invert_core(double wp, double wm, double w0) {
    if (!std::isfinite(wp) || !std::isfinite(wm) || !std::isfinite(w0) || !(w0 > 0.0))
        throw ParameterError("doublet energies and omega_0 must be finite, omega_0 > 0");
    if (!(wm > 0.0) || !(wp > wm)) throw ParameterError("doublet requires omega_plus > omega_minus > 0");

    const double wc = wp * wm / w0; // product rule
    const double sum_meas = wp + wm;
    const double sum_bare = wc + w0;
    const double delta = sum_meas - sum_bare;

    // An exactly uncoupled doublet reproduces sum_bare only to rounding, so a
    // deficit within a few ulp is g = 0, not an inconsistency.
    const double rounding_floor = 8.0 * DBL_EPSILON * std::max(sum_meas, sum_bare);
    double g_pe;
    if (std::abs(delta) <= rounding_floor) {
        g_pe = 0.0;
    } else if (delta < 0.0) {
        throw InconsistentMeasurementError(
            "no real coupling reproduces the doublet (omega_0 lies outside [omega_minus, omega_plus])",
            std::abs(delta) * (sum_meas + sum_bare));
    } else {
        // g^2 = (sum_meas^2 - sum_bare^2)/4 in factored form
        g_pe = 0.5 * std::sqrt(delta * (sum_meas + sum_bare));
    }
    const double Omega = g_pe * std::sqrt(w0 / wc);
    return {wc, g_pe, Omega, 2.0 * Omega / sum_meas};
}

double reported_g(const CoreInversion& core, VariantTag variant) {
    return variant == VariantTag::Plasmon ? core.Omega : core.g_pe;
}

struct ChainResult {
    InversionResult inv;
    EntanglementReport rep;
};

// Full measurement-to-entanglement chain: invert, then run the recovered
// parameters forward through the analytic pipeline.
ChainResult run_chain(double wp, double wm, double w0, VariantTag variant) {
    const CoreInversion core = invert_core(wp, wm, w0);
    const SystemParams params{core.omega_c, w0, PhononCoupling{core.g_pe}, std::nullopt};
    const PolaritonSpectrum spec = polariton_spectrum(params);
    const GroundStateGaussian gs = ground_state(params, spec);
    const EntanglementReport rep = entanglement_report(gs, covariance_from_ground_state(gs));
    return {{core.omega_c, reported_g(core, variant), core.Omega, core.c}, rep};
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string trimmed(const std::string& s) {
    const char* ws = " \t\r\n";
    const std::size_t b = s.find_first_not_of(ws);
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

double parse_number(const std::string& field, long line_no) {
    const std::string t = trimmed(field);
    if (t.empty()) throw ParseError("empty numeric field", line_no);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) throw ParseError("not a number: '" + t + "'", line_no);
    return v;
}

// d(g, E_N)/d(omega) by finite differences at relative step 1e-6, central
// when both shifted chains evaluate, one-sided otherwise.
std::pair<double, double> sensitivity(double wp, double wm, double w0, VariantTag variant, bool plus_axis,
                                      double g0, double en0) {
    const double base = plus_axis ? wp : wm;
    const double h = 1e-6 * base;
    const auto eval = [&](double w) {
        const ChainResult c = plus_axis ? run_chain(w, wm, w0, variant) : run_chain(wp, w, w0, variant);
        return std::pair<double, double>{c.inv.g, c.rep.log_negativity};
    };
    bool have_fwd = true, have_bwd = true;
    std::pair<double, double> fwd{}, bwd{};
    try {
        fwd = eval(base + h);
    } catch (const std::exception&) {
        have_fwd = false;
    }
    try {
        bwd = eval(base - h);
    } catch (const std::exception&) {
        have_bwd = false;
    }
    if (have_fwd && have_bwd)
        return {(fwd.first - bwd.first) / (2.0 * h), (fwd.second - bwd.second) / (2.0 * h)};
    if (have_fwd) return {(fwd.first - g0) / h, (fwd.second - en0) / h};
    if (have_bwd) return {(g0 - bwd.first) / h, (en0 - bwd.second) / h};
    return {std::nan(""), std::nan("")};
}

} // namespace

InversionResult invert_spectrum(const MeasuredDoublet& m) {
    const CoreInversion core = invert_core(m.omega_plus_meas, m.omega_minus_meas, m.omega_0);
    return {core.omega_c, reported_g(core, m.variant), core.Omega, core.c};
}

FitTable fit_from_csv(std::istream& in, double omega_0, VariantTag variant) {
    if (!std::isfinite(omega_0) || !(omega_0 > 0.0)) throw ParameterError("omega_0 must be finite and > 0");

    FitTable table;
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) return table; // empty file, empty table

    ++line_no;
    std::vector<std::string> header = split_fields(line);
    for (std::string& h : header) h = trimmed(h);
    const bool base_ok = header.size() >= 2 && header[0] == "omega_plus_meV" && header[1] == "omega_minus_meV";
    if (base_ok && header.size() == 2) {
        table.has_uncertainties = false;
    } else if (base_ok && header.size() == 4 && header[2] == "sigma_plus_meV" && header[3] == "sigma_minus_meV") {
        table.has_uncertainties = true;
    } else {
        throw ParseError("header must be omega_plus_meV,omega_minus_meV[,sigma_plus_meV,sigma_minus_meV]", line_no);
    }

    const std::size_t n_fields = table.has_uncertainties ? 4 : 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != n_fields)
            throw ParseError("expected " + std::to_string(n_fields) + " fields, got " + std::to_string(fields.size()),
                             line_no);

        FitRow row{};
        row.omega_plus_meas = parse_number(fields[0], line_no);
        row.omega_minus_meas = parse_number(fields[1], line_no);
        if (table.has_uncertainties) {
            const double sp = parse_number(fields[2], line_no);
            const double sm = parse_number(fields[3], line_no);
            if (!std::isfinite(sp) || sp < 0.0 || !std::isfinite(sm) || sm < 0.0)
                throw ParseError("uncertainties must be finite and >= 0", line_no);
            row.sigma_plus = sp;
            row.sigma_minus = sm;
        }

        try {
            const ChainResult cr = run_chain(row.omega_plus_meas, row.omega_minus_meas, omega_0, variant);
            row.status = FitStatus::Ok;
            row.inv = cr.inv;
            row.sigma = cr.rep.sigma;
            row.entropy_over_kB = cr.rep.entropy_over_kB;
            row.log_negativity = cr.rep.log_negativity;
            row.nu_tilde_minus = cr.rep.nu_tilde_minus;
            row.n_virtual = cr.rep.n_virtual;
            if (table.has_uncertainties) {
                const auto dp = sensitivity(row.omega_plus_meas, row.omega_minus_meas, omega_0, variant, true,
                                            row.inv.g, row.log_negativity);
                const auto dm = sensitivity(row.omega_plus_meas, row.omega_minus_meas, omega_0, variant, false,
                                            row.inv.g, row.log_negativity);
                row.sigma_g = std::hypot(dp.first * *row.sigma_plus, dm.first * *row.sigma_minus);
                row.sigma_log_negativity = std::hypot(dp.second * *row.sigma_plus, dm.second * *row.sigma_minus);
            }
        } catch (const InconsistentMeasurementError&) {
            row.status = FitStatus::InconsistentMeasurement;
        } catch (const ParameterError&) {
            row.status = FitStatus::InvalidDoublet;
        }
        table.rows.push_back(row);
    }
    return table;
}

const char* to_string(FitStatus status) {
    switch (status) {
    case FitStatus::Ok: return "ok";
    case FitStatus::InvalidDoublet: return "invalid_doublet";
    case FitStatus::InconsistentMeasurement: return "inconsistent_measurement";
    }
    return "unknown";
}

void write_fit_csv(const FitTable& table, std::ostream& out) {
    out << "omega_plus_meV,omega_minus_meV,omega_c_meV,g_meV,Omega_meV,c,sigma,entropy_over_kB,log_negativity,"
           "nu_tilde_minus,n_virtual,status";
    if (table.has_uncertainties) out << ",sigma_g_meV,sigma_log_negativity";
    out << "\n";

    for (const FitRow& row : table.rows) {
        out << sci12(row.omega_plus_meas) << ',' << sci12(row.omega_minus_meas) << ',';
        if (row.status == FitStatus::Ok) {
            out << sci12(row.inv.omega_c) << ',' << sci12(row.inv.g) << ',' << sci12(row.inv.Omega) << ','
                << sci12(row.inv.c) << ',' << sci12(row.sigma) << ',' << sci12(row.entropy_over_kB) << ','
                << sci12(row.log_negativity) << ',' << sci12(row.nu_tilde_minus) << ',' << sci12(row.n_virtual);
        } else {
            out << ",,,,,,,,"; // derived columns stay empty on failed rows
        }
        out << ',' << to_string(row.status);
        if (table.has_uncertainties) {
            out << ',' << (row.sigma_g ? sci12(*row.sigma_g) : "") << ','
                << (row.sigma_log_negativity ? sci12(*row.sigma_log_negativity) : "");
        }
        out << "\n";
    }
}

} // namespace polariton
