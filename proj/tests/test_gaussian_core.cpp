#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "g2lab/gaussian_core.hpp"
#include "test_util.hpp"

using namespace g2lab;
using testutil::close_abs;
using testutil::close_rel;
using testutil::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("invert_to_dpa: undisplaced state zeroes the linear coefficient") {
    const auto g = GaussianParams::amplitude_squeezed(0.0, 0.3, 0.0);
    const DpaParams d = core::invert_to_dpa(g);
    CHECK(close_abs(d.tc.real(), 0.0, 1e-15));
    CHECK(close_abs(d.tc.imag(), -0.15, 1e-15));
    CHECK(std::abs(d.tb) == 0.0);
    CHECK(d.omega == 0.3);
}

TEST_CASE("invert_to_dpa: displaced state linear coefficient") {
    const auto g = GaussianParams::amplitude_squeezed(0.0, 0.3, 0.8);
    const DpaParams d = core::invert_to_dpa(g);
    // -0.15i * 0.8 * (1 + coth(0.15))
    CHECK(close_abs(d.tb.real(), 0.0, 1e-14));
    CHECK(close_rel(d.tb.imag(), -0.9259910192424198, 1e-13));
}

TEST_CASE("invert_to_dpa: omega * t = r exactly and phase link holds") {
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        const auto g = GaussianParams::create(rng.uniform(0, 2), rng.uniform(0.05, 3),
                                              rng.uniform(0, 2 * kPi), rng.uniform(0, 4),
                                              rng.uniform(0, 2 * kPi), rng.uniform(0.1, 5));
        const DpaParams d = core::invert_to_dpa(g);
        CHECK(d.omega * g.prep_time == g.r);
        const std::complex<double> lhs = std::polar(1.0, g.theta);
        const std::complex<double> rhs =
            std::complex<double>(0.0, 1.0) * std::polar(1.0, d.chi);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
        CHECK(close_rel(d.prep_time(), g.prep_time, 1e-13));
    }
}

TEST_CASE("invert_to_dpa: degenerate squeeze refused") {
    CHECK_THROWS_AS(core::invert_to_dpa(GaussianParams::amplitude_squeezed(0.1, 0.0, 0.5)),
                    DegenerateSqueeze);
    CHECK_THROWS_AS(core::invert_to_dpa(GaussianParams::amplitude_squeezed(0.1, 1e-9, 0.5)),
                    DegenerateSqueeze);
}

TEST_CASE("xi_of_tau: zero at zero, linear growth, preparation anchor") {
    const auto g = GaussianParams::create(0.1, 0.7, 1.1, 0.4, 0.3, 2.0);
    const DpaParams d = core::invert_to_dpa(g);
    CHECK(std::abs(core::xi_of_tau(d, 0.0)) == 0.0);
    const auto xi_t = core::xi_of_tau(d, g.prep_time);
    CHECK(close_rel(std::abs(xi_t), g.r, 1e-13));
    CHECK(close_abs(reduce_phase(std::arg(xi_t)), g.theta, 1e-12));
    CHECK(close_rel(std::abs(core::xi_of_tau(d, 2.0 * g.prep_time)), 2.0 * g.r, 1e-13));
}

TEST_CASE("alpha_of_tau: zero at zero, zero drive stays zero, preparation anchor") {
    const auto g = GaussianParams::amplitude_squeezed(0.1, 0.3, 0.8);
    const DpaParams d = core::invert_to_dpa(g);
    CHECK(std::abs(core::alpha_of_tau(d, 0.0)) == 0.0);
    const auto alpha_t = core::alpha_of_tau(d, g.prep_time);
    CHECK(close_abs(alpha_t.real(), 0.8, 1e-12));
    CHECK(close_abs(alpha_t.imag(), 0.0, 1e-12));

    const auto g0 = GaussianParams::amplitude_squeezed(0.1, 0.3, 0.0);
    const DpaParams d0 = core::invert_to_dpa(g0);
    for (double tau : {0.1, 0.5, 1.7, 3.0})
        CHECK(std::abs(core::alpha_of_tau(d0, tau)) == 0.0);
}

TEST_CASE("displaced_amplitude: lag-zero identity and zero displacement") {
    const auto g = GaussianParams::create(0.2, 0.4, 0.9, 1.3, 0.2);
    CHECK(core::displaced_amplitude(g, 0.0) == g.alpha());
    const auto g0 = GaussianParams::amplitude_squeezed(0.2, 0.4, 0.0);
    for (double x : {0.0, 0.3, 2.0}) {
        CHECK(std::abs(core::displaced_amplitude(g0, x)) == 0.0);
        CHECK(core::abs_A_squared(g0, x) == 0.0);
    }
    CHECK_THROWS_AS(core::displaced_amplitude(
                        GaussianParams::amplitude_squeezed(0.1, 0.0, 0.5), 0.1),
                    DegenerateSqueeze);
    CHECK_THROWS_AS(core::abs_A_squared(GaussianParams::amplitude_squeezed(0.1, 0.0, 0.5), 0.0),
                    DegenerateSqueeze);
}

TEST_CASE("abs_A_squared equals |displaced_amplitude|^2 (both conventions)") {
    Rng rng(23);
    for (int k = 0; k < 500; ++k) {
        const auto g = GaussianParams::create(rng.uniform(0, 2), rng.uniform(0.05, 3),
                                              rng.uniform(0, 2 * kPi), rng.uniform(0, 4),
                                              rng.uniform(0, 2 * kPi));
        const double x = rng.uniform(0, 4);
        for (auto conv : {AmplitudeConvention::reference, AmplitudeConvention::dynamic}) {
            const double direct = std::norm(core::displaced_amplitude(g, x, conv));
            const double closed = core::abs_A_squared(g, x, conv);
            CHECK(close_rel(direct, closed, 1e-12));
        }
    }
}

TEST_CASE("abs_A_squared: lag zero gives |alpha|^2") {
    const auto g = GaussianParams::create(0.0, 0.7, 2.1, 1.5, 0.4);
    CHECK(close_rel(core::abs_A_squared(g, 0.0), 2.25, 1e-15));
}

TEST_CASE("|A| depends on the phases only through theta - 2*phi") {
    Rng rng(37);
    for (int k = 0; k < 100; ++k) {
        const double psi = rng.uniform(0, 2 * kPi);
        const double phi1 = rng.uniform(0, 2 * kPi);
        const double phi2 = rng.uniform(0, 2 * kPi);
        const double r = rng.uniform(0.05, 2);
        const double a = rng.uniform(0.01, 3);
        const double x = rng.uniform(0, 3);
        const auto g1 = GaussianParams::create(0.3, r, psi + 2 * phi1, a, phi1);
        const auto g2 = GaussianParams::create(0.3, r, psi + 2 * phi2, a, phi2);
        CHECK(close_rel(core::abs_A_squared(g1, x), core::abs_A_squared(g2, x), 1e-12));
    }
}

TEST_CASE("round_trip is the identity") {
    const auto check_roundtrip = [](const GaussianParams& g) {
        const GaussianParams back = core::round_trip(g);
        CHECK(close_abs(back.r, g.r, 1e-10));
        CHECK(close_abs(back.theta, g.theta, 1e-10));
        CHECK(close_abs(back.alpha_mag, g.alpha_mag, 1e-10));
        if (g.alpha_mag > 1e-12) CHECK(close_abs(back.phi, g.phi, 1e-10));
        CHECK(back.nbar == g.nbar);
        CHECK(back.prep_time == g.prep_time);
    };
    check_roundtrip(GaussianParams::amplitude_squeezed(0.1, 0.3, 0.8));
    check_roundtrip(GaussianParams::create(0.0, 1.0, kPi / 3, 2.0, kPi / 7));
    Rng rng(51);
    for (int k = 0; k < 300; ++k)
        check_roundtrip(GaussianParams::create(rng.uniform(0, 2), rng.uniform(0.05, 3),
                                               rng.uniform(0, 2 * kPi), rng.uniform(0, 4),
                                               rng.uniform(0, 2 * kPi), rng.uniform(0.2, 4)));
}

TEST_CASE("round_trip canonicalizes the undisplaced phase") {
    const auto g = GaussianParams::create(0.5, 0.9, 2.2, 0.0, 0.0);
    const GaussianParams back = core::round_trip(g);
    CHECK(back.phi == 0.0);
    CHECK(close_abs(back.alpha_mag, 0.0, 1e-12));
}

TEST_CASE("scaled amplitude factors agree with the direct ones") {
    for (double r : {0.06, 0.4, 1.5}) {
        for (double x : {0.01, 0.5, 3.0, 20.0}) {
            for (auto conv : {AmplitudeConvention::reference, AmplitudeConvention::dynamic}) {
                const auto f = core::amplitude_factors(r, x, conv);
                const auto fs = core::amplitude_factors_scaled(r, x, conv);
                const double ex = std::exp(-x);
                CHECK(close_rel(f.X * ex, fs.X, 1e-12));
                CHECK(std::abs(f.Y * ex - fs.Y) <=
                      1e-12 * std::max(1.0, std::abs(fs.Y)));
            }
        }
    }
}

TEST_CASE("parameter validation names the violated constraint") {
    CHECK_THROWS_WITH_AS(GaussianParams::create(-0.1, 0.3, 0, 0, 0),
                         "nbar must be finite and >= 0", std::invalid_argument);
    CHECK_THROWS_WITH_AS(GaussianParams::create(0.1, -0.3, 0, 0, 0),
                         "r must be finite and >= 0", std::invalid_argument);
    CHECK_THROWS_WITH_AS(GaussianParams::create(0.1, 0.3, 0, -1, 0),
                         "alpha_mag must be finite and >= 0", std::invalid_argument);
    CHECK_THROWS_WITH_AS(GaussianParams::create(0.1, 0.3, 0, 1, 0, 0.0),
                         "prep_time must be finite and > 0", std::invalid_argument);
}

TEST_CASE("phase reduction lands in [0, 2*pi)") {
    CHECK(reduce_phase(2 * kPi) == 0.0);
    CHECK(close_abs(reduce_phase(-0.5), 2 * kPi - 0.5, 1e-14));
    CHECK(reduce_phase(0.0) == 0.0);
    const auto g = GaussianParams::create(0, 0.5, 7.0, 1.0, -1.0);
    CHECK(g.theta >= 0.0);
    CHECK(g.theta < 2 * kPi);
    CHECK(g.phi >= 0.0);
    CHECK(g.phi < 2 * kPi);
}
