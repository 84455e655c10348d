#include "polariton/bogoliubov.hpp"
#include "polariton/entanglement.hpp"
#include "polariton/errors.hpp"
#include "polariton/fit.hpp"
#include "polariton/format.hpp"
#include "polariton/gaussian.hpp"
#include "polariton/hopfield.hpp"
#include "polariton/oracle.hpp"
#include "polariton/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace pol = polariton;

namespace {

// Exit codes: 0 ok, 2 parameter/config/parse, 3 instability, 4 unwritable
// output, 5 verify tolerance failure, 6 eigensolver non-convergence, 7 fit
// rows with error status. stderr never carries result data.

struct Options {
    double omega_c = 0.0;
    double omega_0 = 0.0;
    double g = 0.0;
    double chi = 0.0;
    double eps_inf = 1.0;
    double g_diamagnetic = 0.0;
    int n_max = 30;
    std::string variant = "phonon";
    std::string format = "table";
    std::string out_path;
    // sweep
    std::string axis = "omega-c";
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    std::vector<double> g_list;
    // fit
    std::string fit_csv;

    // option presence, filled after parse
    bool has_omega_c = false;
    bool has_omega_0 = false;
    bool has_g = false;
    bool has_chi = false;
    bool has_g_dia = false;
    bool has_format = false;
    bool has_start = false;
    bool has_stop = false;
    bool has_points = false;
};

pol::VariantTag variant_tag(const std::string& name) {
    if (name == "phonon") return pol::VariantTag::Phonon;
    if (name == "exciton") return pol::VariantTag::Exciton;
    return pol::VariantTag::Plasmon;
}

pol::CouplingVariant build_coupling(const Options& o, bool coupling_required) {
    const pol::VariantTag tag = variant_tag(o.variant);
    if (tag == pol::VariantTag::Exciton) {
        if (o.has_g) throw pol::ConfigError("variant exciton takes --chi, not --g");
        if (!o.has_chi && coupling_required) throw pol::ConfigError("variant exciton requires --chi");
        return pol::ExcitonCoupling{o.has_chi ? o.chi : 0.0, o.eps_inf};
    }
    if (o.has_chi) throw pol::ConfigError("--chi only applies to variant exciton");
    if (!o.has_g && coupling_required)
        throw pol::ConfigError("variant " + o.variant + " requires --g");
    const double g = o.has_g ? o.g : 0.0;
    if (tag == pol::VariantTag::Plasmon) return pol::PlasmonCoupling{g};
    return pol::PhononCoupling{g};
}

pol::SystemParams build_params(const Options& o) {
    if (!o.has_omega_c) throw pol::ConfigError("--omega-c is required");
    if (!o.has_omega_0) throw pol::ConfigError("--omega-0 is required");
    pol::SystemParams params{o.omega_c, o.omega_0, build_coupling(o, true), std::nullopt};
    if (o.has_g_dia) params.diamagnetic_override = o.g_diamagnetic;
    return params;
}

using Record = std::vector<std::pair<std::string, double>>;

void render_record(const Record& rec, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        for (std::size_t i = 0; i < rec.size(); ++i) os << (i ? "," : "") << rec[i].first;
        os << "\n";
        for (std::size_t i = 0; i < rec.size(); ++i) os << (i ? "," : "") << pol::sci12(rec[i].second);
        os << "\n";
    } else if (format == "json-lines") {
        os << "{";
        for (std::size_t i = 0; i < rec.size(); ++i)
            os << (i ? "," : "") << "\"" << rec[i].first << "\":" << pol::json_number(rec[i].second);
        os << "}\n";
    } else {
        std::size_t width = 0;
        for (const auto& [name, value] : rec) width = std::max(width, name.size());
        for (const auto& [name, value] : rec)
            os << name << std::string(width - name.size() + 2, ' ') << pol::sci12(value) << "\n";
    }
}

Record spectrum_record(const pol::SystemParams& params, const pol::PolaritonSpectrum& spec) {
    const pol::ResolvedCoupling rc = pol::resolve_coupling(params);
    return {{"omega_c_meV", params.omega_c},
            {"omega_0_meV", params.omega_0},
            {"g_effective_meV", rc.g_effective},
            {"Omega_meV", spec.Omega},
            {"G_meV", spec.G},
            {"omega_plus_meV", spec.omega_plus},
            {"omega_minus_meV", spec.omega_minus},
            {"theta_rad", spec.theta}};
}

void append_ground(Record& rec, const pol::GroundStateGaussian& gs) {
    rec.insert(rec.end(), {{"a", gs.a},
                           {"b", gs.b},
                           {"c", gs.c},
                           {"r", gs.r},
                           {"e_ground_meV", gs.e_ground},
                           {"n_virtual", pol::virtual_photon_number(gs)}});
}

int cmd_spectrum(const Options& o, std::ostream& os) {
    const pol::SystemParams params = build_params(o);
    render_record(spectrum_record(params, pol::polariton_spectrum(params)), o.format, os);
    return 0;
}

int cmd_ground(const Options& o, std::ostream& os) {
    const pol::SystemParams params = build_params(o);
    const pol::PolaritonSpectrum spec = pol::polariton_spectrum(params);
    Record rec = spectrum_record(params, spec);
    append_ground(rec, pol::ground_state(params, spec));
    render_record(rec, o.format, os);
    return 0;
}

int cmd_entangle(const Options& o, std::ostream& os) {
    const pol::SystemParams params = build_params(o);
    const pol::PolaritonSpectrum spec = pol::polariton_spectrum(params);
    const pol::GroundStateGaussian gs = pol::ground_state(params, spec);
    const pol::EntanglementReport rep = pol::entanglement_report(gs, pol::covariance_from_ground_state(gs));
    Record rec = spectrum_record(params, spec);
    append_ground(rec, gs);
    rec.insert(rec.end(), {{"sigma", rep.sigma},
                           {"entropy_over_kB", rep.entropy_over_kB},
                           {"nu_tilde_minus", rep.nu_tilde_minus},
                           {"log_negativity", rep.log_negativity}});
    render_record(rec, o.format, os);
    return 0;
}

int cmd_sweep(const Options& o, std::ostream& os) {
    if (!o.has_start || !o.has_stop || !o.has_points)
        throw pol::ConfigError("sweep requires --start, --stop and --points");
    if (!o.has_omega_0) throw pol::ConfigError("--omega-0 is required");

    pol::SweepSpec spec;
    spec.axis = o.axis == "g" ? pol::SweepAxis::G : pol::SweepAxis::OmegaC;
    spec.start = o.start;
    spec.stop = o.stop;
    spec.points = o.points;
    spec.g_values = o.g_list;

    // The swept quantity's own flag is ignored; the base only fixes what is
    // not swept. Coupling flags are optional when the curves come from
    // --g-list or the g axis.
    const bool coupling_required = spec.axis == pol::SweepAxis::OmegaC && o.g_list.empty();
    pol::SystemParams base{0.0, o.omega_0, build_coupling(o, coupling_required), std::nullopt};
    if (o.has_g_dia) base.diamagnetic_override = o.g_diamagnetic;
    if (spec.axis == pol::SweepAxis::G) {
        if (!o.has_omega_c) throw pol::ConfigError("g sweep requires --omega-c");
        base.omega_c = o.omega_c;
    } else {
        base.omega_c = o.start;
    }
    spec.base = base;

    const std::vector<pol::SweepRow> rows = pol::run_sweep(spec);
    const std::string format = o.has_format ? o.format : "csv"; // sweep defaults to CSV
    if (format == "csv") {
        pol::write_sweep_csv(rows, os);
    } else {
        static const char* names[7] = {"omega_c_meV", "g_meV",           "omega_plus_meV", "omega_minus_meV",
                                       "c",           "entropy_over_kB", "log_negativity"};
        for (const pol::SweepRow& r : rows) {
            const double vals[7] = {r.omega_c, r.g, r.omega_plus, r.omega_minus, r.c, r.entropy_over_kB,
                                    r.log_negativity};
            if (format == "json-lines") {
                os << "{";
                for (int i = 0; i < 7; ++i) os << (i ? "," : "") << "\"" << names[i] << "\":" << pol::json_number(vals[i]);
                os << "}\n";
            } else {
                for (int i = 0; i < 7; ++i) os << (i ? "  " : "") << names[i] << "=" << pol::sci12(vals[i]);
                os << "\n";
            }
        }
    }
    return 0;
}

struct VerifyRow {
    std::string quantity;
    double analytic;
    double oracle;
    double tol;
};

int cmd_verify(const Options& o, std::ostream& os) {
    const pol::SystemParams params = build_params(o);
    const pol::PolaritonSpectrum spec = pol::polariton_spectrum(params);
    const pol::GroundStateGaussian gs = pol::ground_state(params, spec);
    const pol::CovarianceMatrix cov = pol::covariance_from_ground_state(gs);
    const pol::EntanglementReport rep = pol::entanglement_report(gs, cov);

    const pol::FockTruncation trunc{o.n_max};
    const pol::NumericalGroundState num = pol::ground_state_numeric(pol::build_hamiltonian(params, trunc), trunc);
    const pol::Mat4 cov_num = pol::covariance_numeric(num);

    std::vector<VerifyRow> rows;
    rows.push_back({"energy_meV", gs.e_ground, num.energy, 1e-6 * std::abs(gs.e_ground)});
    rows.push_back({"n_photon", rep.n_virtual, pol::photon_number_numeric(num), 1e-4});
    static const char* q[4] = {"x1", "p1", "x2", "p2"};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = r; c < 4; ++c)
            rows.push_back({std::string("cov_") + q[r] + q[c], cov.v(r, c), cov_num(r, c), 1e-5});
    rows.push_back({"entropy_over_kB", rep.entropy_over_kB,
                    pol::entropy_numeric(pol::reduced_density_matrix(num, 1)), 1e-4});
    rows.push_back({"log_negativity", rep.log_negativity, pol::log_negativity_numeric(num), 1e-3});

    bool all_pass = true;
    const auto status = [&](const VerifyRow& r) {
        const bool ok = std::abs(r.analytic - r.oracle) <= r.tol;
        all_pass = all_pass && ok;
        return ok ? "pass" : "fail";
    };

    if (o.format == "csv") {
        os << "quantity,analytic,oracle,abs_diff,tolerance,status\n";
        for (const VerifyRow& r : rows)
            os << r.quantity << ',' << pol::sci12(r.analytic) << ',' << pol::sci12(r.oracle) << ','
               << pol::sci12(std::abs(r.analytic - r.oracle)) << ',' << pol::sci12(r.tol) << ',' << status(r) << "\n";
    } else if (o.format == "json-lines") {
        for (const VerifyRow& r : rows)
            os << "{\"quantity\":\"" << r.quantity << "\",\"analytic\":" << pol::json_number(r.analytic)
               << ",\"oracle\":" << pol::json_number(r.oracle)
               << ",\"abs_diff\":" << pol::json_number(std::abs(r.analytic - r.oracle))
               << ",\"tolerance\":" << pol::json_number(r.tol) << ",\"status\":\"" << status(r) << "\"}\n";
    } else {
        os << "quantity          analytic             oracle               abs_diff             status\n";
        for (const VerifyRow& r : rows) {
            std::string name = r.quantity;
            name.resize(18, ' ');
            os << name << pol::sci12(r.analytic) << "  " << pol::sci12(r.oracle) << "  "
               << pol::sci12(std::abs(r.analytic - r.oracle)) << "  " << status(r) << "\n";
        }
    }
    return all_pass ? 0 : 5;
}

int cmd_fit(const Options& o, std::ostream& os) {
    if (!o.has_omega_0) throw pol::ConfigError("--omega-0 is required");
    std::ifstream in(o.fit_csv);
    if (!in) throw pol::ConfigError("cannot open input file: " + o.fit_csv);
    const pol::FitTable table = pol::fit_from_csv(in, o.omega_0, variant_tag(o.variant));
    pol::write_fit_csv(table, os); // fit output is CSV regardless of --format
    for (const pol::FitRow& row : table.rows)
        if (row.status != pol::FitStatus::Ok) return 7;
    return 0;
}

int run_with_sink(const Options& o, const std::function<int(std::ostream&)>& fn) {
    std::ostringstream buffer;
    const int code = fn(buffer);
    if (o.out_path.empty()) {
        std::cout << buffer.str() << std::flush;
        return code;
    }
    std::ofstream f(o.out_path);
    if (!f) {
        std::cerr << "cannot open output path: " << o.out_path << "\n";
        return 4;
    }
    f << buffer.str() << std::flush;
    if (!f) {
        std::cerr << "write failed: " << o.out_path << "\n";
        return 4;
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"polariton: ultrastrong-coupling polariton spectra, Gaussian ground states and entanglement"};
    app.require_subcommand(1);

    const char* env_config = std::getenv("POLARITON_CONFIG");
    app.set_config("--config", env_config ? env_config : "",
                   "flat key=value config file (flags take precedence; default path from POLARITON_CONFIG)");
    app.allow_config_extras(false);

    auto* opt_omega_c = app.add_option("--omega-c", o.omega_c, "bare cavity energy, meV");
    auto* opt_omega_0 = app.add_option("--omega-0", o.omega_0, "bare matter excitation energy, meV");
    auto* opt_g = app.add_option("--g", o.g, "coupling strength, meV (phonon/plasmon variants)");
    auto* opt_chi = app.add_option("--chi", o.chi, "dimensionless photon-exciton coupling (exciton variant)");
    app.add_option("--eps-inf", o.eps_inf, "background dielectric constant (exciton variant)")->capture_default_str();
    auto* opt_g_dia = app.add_option("--g-diamagnetic", o.g_diamagnetic,
                                     "diamagnetic coefficient override, meV (default Omega^2/omega_0)");
    app.add_option("--variant", o.variant, "coupling variant")
        ->check(CLI::IsMember({"phonon", "exciton", "plasmon"}))
        ->capture_default_str();
    app.add_option("--n-max", o.n_max, "Fock cutoff per mode for the numerical verifier")->capture_default_str();
    auto* opt_format = app.add_option("--format", o.format, "stdout format")
                           ->check(CLI::IsMember({"table", "csv", "json-lines"}))
                           ->capture_default_str();
    app.add_option("--out", o.out_path, "write results to this file instead of stdout");

    auto* opt_axis = app.add_option("--axis", o.axis, "sweep axis")->check(CLI::IsMember({"omega-c", "g"}));
    auto* opt_start = app.add_option("--start", o.start, "sweep start, meV");
    auto* opt_stop = app.add_option("--stop", o.stop, "sweep stop, meV");
    auto* opt_points = app.add_option("--points", o.points, "sweep point count");
    app.add_option("--g-list", o.g_list, "comma-separated g values, one sweep curve each")->delimiter(',');

    CLI::App* sub_spectrum = app.add_subcommand("spectrum", "polariton branch energies and mixing angle");
    CLI::App* sub_ground = app.add_subcommand("ground", "ground-state Gaussian coefficients");
    CLI::App* sub_entangle = app.add_subcommand("entangle", "entanglement entropy and logarithmic negativity");
    CLI::App* sub_sweep = app.add_subcommand("sweep", "parameter sweep, CSV rows");
    CLI::App* sub_verify = app.add_subcommand("verify", "analytic results against the truncated-Fock verifier");
    CLI::App* sub_fit = app.add_subcommand("fit", "invert measured doublets from a CSV file");
    for (CLI::App* sub : {sub_spectrum, sub_ground, sub_entangle, sub_sweep, sub_verify, sub_fit})
        sub->fallthrough();
    sub_fit->add_option("csv", o.fit_csv, "input CSV with measured doublets")->required()->configurable(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    o.has_omega_c = opt_omega_c->count() > 0;
    o.has_omega_0 = opt_omega_0->count() > 0;
    o.has_g = opt_g->count() > 0;
    o.has_chi = opt_chi->count() > 0;
    o.has_g_dia = opt_g_dia->count() > 0;
    o.has_format = opt_format->count() > 0;
    o.has_start = opt_start->count() > 0;
    o.has_stop = opt_stop->count() > 0;
    o.has_points = opt_points->count() > 0;

    try {
        if (app.got_subcommand(sub_spectrum)) return run_with_sink(o, [&](std::ostream& os) { return cmd_spectrum(o, os); });
        if (app.got_subcommand(sub_ground)) return run_with_sink(o, [&](std::ostream& os) { return cmd_ground(o, os); });
        if (app.got_subcommand(sub_entangle)) return run_with_sink(o, [&](std::ostream& os) { return cmd_entangle(o, os); });
        if (app.got_subcommand(sub_sweep)) return run_with_sink(o, [&](std::ostream& os) { return cmd_sweep(o, os); });
        if (app.got_subcommand(sub_verify)) return run_with_sink(o, [&](std::ostream& os) { return cmd_verify(o, os); });
        if (app.got_subcommand(sub_fit)) return run_with_sink(o, [&](std::ostream& os) { return cmd_fit(o, os); });
    } catch (const pol::InstabilityError& e) {
        std::cerr << "instability: " << e.what() << "\n";
        return 3;
    } catch (const pol::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 6;
    } catch (const pol::ParseError& e) {
        std::cerr << "parse error at line " << e.line << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) { // ParameterError, ConfigError
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
