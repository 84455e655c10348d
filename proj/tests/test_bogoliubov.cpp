#include "doctest.h"

#include "polariton/bogoliubov.hpp"
#include "polariton/errors.hpp"
#include "polariton/hopfield.hpp"
#include "polariton/mat.hpp"
#include "support/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace polariton;

namespace {

constexpr double w0 = 169.1;

SystemParams phonon_params(double omega_c, double omega_0, double g) {
    return {omega_c, omega_0, PhononCoupling{g}, std::nullopt};
}

struct Point {
    SystemParams params;
    PolaritonSpectrum spec;
    GroundStateGaussian gs;
};

Point make_point(double omega_c, double g) {
    const SystemParams p = phonon_params(omega_c, w0, g);
    const PolaritonSpectrum s = polariton_spectrum(p);
    return {p, s, ground_state(p, s)};
}

} // namespace

TEST_CASE("transform is symplectic across the parameter grid") {
    const Mat4 j = symplectic_form();
    for (const double rc : {0.2, 0.7, 1.0, 1.9, 3.0}) {
        for (const double rg : {0.01, 0.3, 0.7, 1.0}) {
            const SystemParams p = phonon_params(rc * w0, w0, rg * w0);
            const TransformCoefficients t = build_transform(p, polariton_spectrum(p));
            const Mat4 res = t.matrix * j * transpose(t.matrix);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) CHECK(std::abs(res(r, c) - j(r, c)) <= 1e-14);
        }
    }
}

TEST_CASE("transform coefficients at the resonant half-coupling point") {
    const Point pt = make_point(w0, 0.5 * w0);
    const TransformCoefficients t = build_transform(pt.params, pt.spec);
    CHECK(t.mu == doctest::Approx(0.78615137775742329).epsilon(1e-14));
    CHECK(t.nu == doctest::Approx(1.272019649514069).epsilon(1e-14));
    // position rows mix with the half-angle weights
    const double c_half = std::cos(0.5 * pt.spec.theta);
    const double s_half = std::sin(0.5 * pt.spec.theta);
    CHECK(t.matrix(0, 0) == doctest::Approx(-c_half * t.mu).epsilon(1e-15));
    CHECK(t.matrix(0, 2) == doctest::Approx(s_half / t.nu).epsilon(1e-15));
    CHECK(t.matrix(2, 0) == doctest::Approx(s_half * t.nu).epsilon(1e-15));
    CHECK(t.matrix(2, 2) == doctest::Approx(c_half / t.mu).epsilon(1e-15));
}

TEST_CASE("ground-state coefficients at frozen reference points") {
    SUBCASE("resonance, half coupling") {
        const Point pt = make_point(w0, 0.5 * w0);
        CHECK(pt.gs.a == doctest::Approx(1.3416407864998738).epsilon(1e-14));
        CHECK(pt.gs.b == doctest::Approx(0.89442719099991588).epsilon(1e-14));
        CHECK(pt.gs.c == doctest::Approx(0.44721359549995794).epsilon(1e-14));
        CHECK(pt.gs.r == doctest::Approx(0.43350736324528255).epsilon(1e-14));
        CHECK(pt.gs.e_ground == doctest::Approx(189.05954749760722).epsilon(1e-14));
        CHECK(virtual_photon_number(pt.gs) == doctest::Approx(0.059016994374947424).epsilon(1e-13));
    }
    SUBCASE("resonance, fifth coupling") {
        const Point pt = make_point(w0, 0.2 * w0);
        CHECK(pt.gs.a == doctest::Approx(1.0590271297461938).epsilon(1e-14));
        CHECK(pt.gs.b == doctest::Approx(0.98058067569092016).epsilon(1e-14));
        CHECK(pt.gs.c == doctest::Approx(0.19611613513818403).epsilon(1e-14));
        CHECK(pt.gs.e_ground == doctest::Approx(172.44883994970798).epsilon(1e-14));
        CHECK(virtual_photon_number(pt.gs) == doctest::Approx(0.009901951359278483).epsilon(1e-13));
    }
    SUBCASE("detuned, strong coupling") {
        const Point pt = make_point(2.0 * w0, 0.7 * w0);
        CHECK(pt.gs.a == doctest::Approx(1.2022029657270521).epsilon(1e-14));
        CHECK(pt.gs.b == doctest::Approx(0.90618313999526543).epsilon(1e-14));
        CHECK(pt.gs.c == doctest::Approx(0.29902518020086633).epsilon(1e-14));
        CHECK(pt.gs.e_ground == doctest::Approx(279.91030599104421).epsilon(1e-14));
        CHECK(virtual_photon_number(pt.gs) == doctest::Approx(0.027096526430579394).epsilon(1e-13));
    }
}

TEST_CASE("gaussian exponent stays normalized: a b - c^2 = 1") {
    for (const double rc : {0.2, 0.5, 1.0, 1.5, 3.0}) {
        for (const double rg : {0.01, 0.2, 0.6, 1.0}) {
            const Point pt = make_point(rc * w0, rg * w0);
            CHECK(std::abs(pt.gs.a * pt.gs.b - pt.gs.c * pt.gs.c - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("uncoupled limits are exact") {
    SUBCASE("detuned below") {
        const Point pt = make_point(0.7 * w0, 0.0);
        CHECK(pt.gs.a == 1.0);
        CHECK(pt.gs.b == 1.0);
        CHECK(pt.gs.c == 0.0);
        CHECK(pt.gs.r == 0.0);
        CHECK(virtual_photon_number(pt.gs) == 0.0);
    }
    SUBCASE("detuned above") {
        const Point pt = make_point(1.8 * w0, 0.0);
        CHECK(pt.gs.a == 1.0);
        CHECK(pt.gs.b == 1.0);
        CHECK(pt.gs.c == 0.0);
    }
    SUBCASE("degenerate") {
        const Point pt = make_point(w0, 0.0);
        CHECK(pt.gs.a == 1.0);
        CHECK(pt.gs.b == 1.0);
        CHECK(pt.gs.c == 0.0);
        const TransformCoefficients t = build_transform(pt.params, pt.spec);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) CHECK(t.matrix(r, c) == (r == c ? 1.0 : 0.0));
    }
}

TEST_CASE("ground-state energy is half the branch sum") {
    const Point pt = make_point(1.3 * w0, 0.4 * w0);
    CHECK(pt.gs.e_ground == 0.5 * (pt.spec.omega_plus + pt.spec.omega_minus));
}

TEST_CASE("wavefunction values") {
    const Point pt = make_point(w0, 0.5 * w0);
    CHECK(wavefunction_00(pt.gs, 0.0, 0.0) == doctest::Approx(0.56418958354775629).epsilon(1e-15));
    CHECK(wavefunction_00(pt.gs, 1.0, 0.0) == doctest::Approx(0.28846389846289825).epsilon(1e-14));
}

TEST_CASE("wavefunctions are normalized and mutually orthogonal") {
    const Point pt = make_point(1.4 * w0, 0.6 * w0);
    const TransformCoefficients t = build_transform(pt.params, pt.spec);

    const auto p00 = [&](double x1, double x2) { return wavefunction_00(pt.gs, x1, x2); };
    const auto p10 = [&](double x1, double x2) { return wavefunction_10(pt.gs, t, x1, x2); };
    const auto p01 = [&](double x1, double x2) { return wavefunction_01(pt.gs, t, x1, x2); };

    const auto overlap = [&](const auto& f, const auto& g) {
        return testsupport::integrate_2d([&](double x1, double x2) { return f(x1, x2) * g(x1, x2); }, -8.0, 8.0, 64);
    };

    CHECK(std::abs(overlap(p00, p00) - 1.0) <= 1e-8);
    CHECK(std::abs(overlap(p10, p10) - 1.0) <= 1e-8);
    CHECK(std::abs(overlap(p01, p01) - 1.0) <= 1e-8);
    CHECK(std::abs(overlap(p00, p10)) <= 1e-8);
    CHECK(std::abs(overlap(p00, p01)) <= 1e-8);
    CHECK(std::abs(overlap(p10, p01)) <= 1e-8);
}

TEST_CASE("ground state is annihilated by both polariton lowering operators") {
    // (X_k + d/dX_k) psi00 = 0 for both normal modes, checked with central
    // finite differences in the lab coordinates.
    const Point pt = make_point(0.8 * w0, 0.45 * w0);
    const TransformCoefficients t = build_transform(pt.params, pt.spec);
    const double h = 1e-5;

    std::mt19937 rng(4321);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    for (int n = 0; n < 25; ++n) {
        const double x1 = dist(rng);
        const double x2 = dist(rng);
        const double d1 = (wavefunction_00(pt.gs, x1 + h, x2) - wavefunction_00(pt.gs, x1 - h, x2)) / (2.0 * h);
        const double d2 = (wavefunction_00(pt.gs, x1, x2 + h) - wavefunction_00(pt.gs, x1, x2 - h)) / (2.0 * h);
        const double psi = wavefunction_00(pt.gs, x1, x2);

        // X_k psi + dpsi/dX_k, with the momentum rows supplying the gradient
        // direction: i P_k -> T(p-row) grad in lab coordinates.
        const double lower = (t.matrix(0, 0) * x1 + t.matrix(0, 2) * x2) * psi + t.matrix(1, 1) * d1 + t.matrix(1, 3) * d2;
        const double upper = (t.matrix(2, 0) * x1 + t.matrix(2, 2) * x2) * psi + t.matrix(3, 1) * d1 + t.matrix(3, 3) * d2;
        CHECK(std::abs(lower) <= 1e-8);
        CHECK(std::abs(upper) <= 1e-8);
    }
}

TEST_CASE("ground-state ops reject a non-default diamagnetic coefficient") {
    SystemParams p = phonon_params(w0, w0, 50.0);
    p.diamagnetic_override = 10.0;
    const PolaritonSpectrum s = polariton_spectrum(p);
    CHECK_THROWS_AS(ground_state(p, s), ParameterError);
    CHECK_THROWS_AS(build_transform(p, s), ParameterError);

    // the exact default value is accepted
    const ResolvedCoupling rc = resolve_coupling(phonon_params(w0, w0, 50.0));
    p.diamagnetic_override = rc.Omega * rc.Omega / w0;
    const PolaritonSpectrum s2 = polariton_spectrum(p);
    CHECK(ground_state(p, s2).a > 0.0);
}
