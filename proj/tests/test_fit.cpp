#include "doctest.h"

#include "polariton/errors.hpp"
#include "polariton/fit.hpp"
#include "polariton/hopfield.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace polariton;

namespace {

constexpr double w0 = 169.1;

MeasuredDoublet doublet(double wp, double wm, VariantTag variant = VariantTag::Phonon) {
    return {wp, wm, w0, variant, std::nullopt, std::nullopt};
}

} // namespace

TEST_CASE("inversion recovers the generating parameters") {
    SUBCASE("resonant half coupling") {
        const InversionResult inv = invert_spectrum(doublet(273.60954749760722, 104.50954749760722));
        CHECK(std::abs(inv.omega_c - w0) <= 1e-12 * w0);
        CHECK(std::abs(inv.g - 84.55) <= 1e-12 * 84.55);
        CHECK(std::abs(inv.Omega - 84.55) <= 1e-12 * 84.55);
        CHECK(std::abs(inv.c - 0.44721359549995794) <= 1e-13);
    }
    SUBCASE("round trip across detunings and couplings") {
        for (const double rc : {0.3, 0.9, 1.0, 1.7, 2.8}) {
            for (const double rg : {0.02, 0.3, 0.75, 1.0}) {
                const double wc = rc * w0;
                const double g = rg * w0;
                const SystemParams p{wc, w0, PhononCoupling{g}, std::nullopt};
                const PolaritonSpectrum s = polariton_spectrum(p);
                const InversionResult inv = invert_spectrum(doublet(s.omega_plus, s.omega_minus));
                CHECK(std::abs(inv.omega_c - wc) <= 1e-10 * wc);
                CHECK(std::abs(inv.g - g) <= 1e-10 * g);
            }
        }
    }
    SUBCASE("plasmon reports the bare bilinear coupling") {
        const SystemParams p{1.4 * w0, w0, PlasmonCoupling{47.0}, std::nullopt};
        const PolaritonSpectrum s = polariton_spectrum(p);
        const InversionResult inv = invert_spectrum(doublet(s.omega_plus, s.omega_minus, VariantTag::Plasmon));
        CHECK(std::abs(inv.g - 47.0) <= 1e-10 * 47.0);
        CHECK(std::abs(inv.g - inv.Omega) == 0.0);
    }
    SUBCASE("exciton reports the photon-energy convention coupling") {
        const double chi = 0.02;
        const SystemParams p{0.9 * w0, w0, ExcitonCoupling{chi, 1.0}, std::nullopt};
        const PolaritonSpectrum s = polariton_spectrum(p);
        const InversionResult inv = invert_spectrum(doublet(s.omega_plus, s.omega_minus, VariantTag::Exciton));
        const double g_expected = w0 * std::sqrt(std::numbers::pi * chi);
        CHECK(std::abs(inv.g - g_expected) <= 1e-10 * g_expected);
    }
}

TEST_CASE("doublet straddling the bare matter energy is required") {
    // omega_0 outside [omega_minus, omega_plus] has no real coupling
    CHECK_THROWS_AS(invert_spectrum(doublet(150.0, 100.0)), InconsistentMeasurementError);
    try {
        invert_spectrum(doublet(150.0, 100.0));
    } catch (const InconsistentMeasurementError& e) {
        CHECK(e.residual > 0.0);
    }
}

TEST_CASE("uncoupled doublet pins g to exactly zero") {
    // (w0, wc) is the exact spectrum at g = 0; the inversion must not
    // manufacture a tiny coupling out of rounding noise.
    const InversionResult inv = invert_spectrum(doublet(w0, 120.0));
    CHECK(inv.g == 0.0);
    CHECK(inv.c == 0.0);
    CHECK(std::abs(inv.omega_c - 120.0) <= 1e-13 * 120.0);
}

TEST_CASE("invalid doublets are rejected") {
    CHECK_THROWS_AS(invert_spectrum(doublet(100.0, 150.0)), ParameterError);  // swapped
    CHECK_THROWS_AS(invert_spectrum(doublet(150.0, -10.0)), ParameterError); // negative
    CHECK_THROWS_AS(invert_spectrum(doublet(150.0, 150.0)), ParameterError); // degenerate
    CHECK_THROWS_AS(invert_spectrum({150.0, 100.0, -1.0, VariantTag::Phonon, std::nullopt, std::nullopt}),
                    ParameterError); // bad omega_0
}

TEST_CASE("csv ingestion") {
    SUBCASE("plain two-column table") {
        std::istringstream in("omega_plus_meV,omega_minus_meV\n"
                              "273.60954749760722,104.50954749760722\n"
                              "\n"
                              "169.1,120.0\n");
        const FitTable table = fit_from_csv(in, w0, VariantTag::Phonon);
        REQUIRE(table.rows.size() == 2);
        CHECK_FALSE(table.has_uncertainties);
        CHECK(table.rows[0].status == FitStatus::Ok);
        CHECK(std::abs(table.rows[0].inv.g - 84.55) <= 1e-10 * 84.55);
        CHECK(table.rows[0].log_negativity == doctest::Approx(0.62541892314281962).epsilon(1e-10));
        CHECK(table.rows[1].status == FitStatus::Ok);
        CHECK(table.rows[1].inv.g == 0.0);
        CHECK_FALSE(table.rows[0].sigma_g.has_value());
    }
    SUBCASE("row statuses survive mixed-quality data") {
        std::istringstream in("omega_plus_meV,omega_minus_meV\n"
                              "273.6,104.5\n"
                              "150.0,100.0\n"
                              "100.0,150.0\n");
        const FitTable table = fit_from_csv(in, w0, VariantTag::Phonon);
        REQUIRE(table.rows.size() == 3);
        CHECK(table.rows[0].status == FitStatus::Ok);
        CHECK(table.rows[1].status == FitStatus::InconsistentMeasurement);
        CHECK(table.rows[2].status == FitStatus::InvalidDoublet);
    }
    SUBCASE("uncertainty columns propagate") {
        std::istringstream in("omega_plus_meV,omega_minus_meV,sigma_plus_meV,sigma_minus_meV\n"
                              "273.60954749760722,104.50954749760722,0.1,0.2\n");
        const FitTable table = fit_from_csv(in, w0, VariantTag::Phonon);
        REQUIRE(table.rows.size() == 1);
        CHECK(table.has_uncertainties);
        REQUIRE(table.rows[0].sigma_g.has_value());
        REQUIRE(table.rows[0].sigma_log_negativity.has_value());
        CHECK(*table.rows[0].sigma_g > 0.0);
        CHECK(*table.rows[0].sigma_log_negativity > 0.0);

        // linear propagation: doubling both input sigmas doubles the outputs
        std::istringstream in2("omega_plus_meV,omega_minus_meV,sigma_plus_meV,sigma_minus_meV\n"
                               "273.60954749760722,104.50954749760722,0.2,0.4\n");
        const FitTable table2 = fit_from_csv(in2, w0, VariantTag::Phonon);
        CHECK(std::abs(*table2.rows[0].sigma_g - 2.0 * *table.rows[0].sigma_g) <= 1e-12 * *table2.rows[0].sigma_g);
        CHECK(std::abs(*table2.rows[0].sigma_log_negativity - 2.0 * *table.rows[0].sigma_log_negativity) <=
              1e-12 * *table2.rows[0].sigma_log_negativity);
    }
    SUBCASE("empty input yields an empty table") {
        std::istringstream in("");
        CHECK(fit_from_csv(in, w0, VariantTag::Phonon).rows.empty());
    }
    SUBCASE("malformed input is rejected with the offending line") {
        std::istringstream bad_header("frequency_plus,frequency_minus\n1,2\n");
        CHECK_THROWS_AS(fit_from_csv(bad_header, w0, VariantTag::Phonon), ParseError);

        std::istringstream bad_number("omega_plus_meV,omega_minus_meV\n273.6,104.5\nhello,1\n");
        try {
            fit_from_csv(bad_number, w0, VariantTag::Phonon);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }

        std::istringstream bad_count("omega_plus_meV,omega_minus_meV\n273.6\n");
        CHECK_THROWS_AS(fit_from_csv(bad_count, w0, VariantTag::Phonon), ParseError);

        std::istringstream bad_sigma("omega_plus_meV,omega_minus_meV,sigma_plus_meV,sigma_minus_meV\n"
                                     "273.6,104.5,-0.1,0.1\n");
        CHECK_THROWS_AS(fit_from_csv(bad_sigma, w0, VariantTag::Phonon), ParseError);
    }
}

TEST_CASE("csv emission") {
    std::istringstream in("omega_plus_meV,omega_minus_meV\n"
                          "169.1,120.0\n"
                          "150.0,100.0\n");
    const FitTable table = fit_from_csv(in, w0, VariantTag::Phonon);
    std::ostringstream out;
    write_fit_csv(table, out);

    const std::string text = out.str();
    CHECK(text.find("omega_plus_meV,omega_minus_meV,omega_c_meV,g_meV,Omega_meV,c,sigma,entropy_over_kB,"
                    "log_negativity,nu_tilde_minus,n_virtual,status") == 0);
    CHECK(text.find(",ok") != std::string::npos);
    CHECK(text.find(",,,,,,,,,,inconsistent_measurement") != std::string::npos);
    // no uncertainty columns without uncertainty inputs
    CHECK(text.find("sigma_g_meV") == std::string::npos);

    SUBCASE("uncertainty header appears when inputs carry uncertainties") {
        std::istringstream in2("omega_plus_meV,omega_minus_meV,sigma_plus_meV,sigma_minus_meV\n"
                               "273.6,104.5,0.1,0.1\n");
        std::ostringstream out2;
        write_fit_csv(fit_from_csv(in2, w0, VariantTag::Phonon), out2);
        CHECK(out2.str().find(",sigma_g_meV,sigma_log_negativity") != std::string::npos);
    }
}
