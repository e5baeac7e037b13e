#include "g2lab/coherence.hpp"

#include <cmath>
#include <limits>

#include "g2lab/gaussian_core.hpp"

namespace g2lab::coherence {

namespace {

/// Beyond this total hyperbolic argument the evaluation switches to the
/// e^{-x}-scaled representation; cosh overflows near 710.
constexpr double kScaledThreshold = 300.0;

struct Pieces {
    double n, s, u, v, abs_a2, n_tau;  // all consistently scaled (see below)
    double n_zero;                     // never scaled
};

// Assembles every ingredient of the master formula. For 2r + x above the
// threshold the n, s, u, v values carry a factor e^{-x} and n_tau a factor
// e^{-2x}; the final ratio is invariant under that scaling.
Pieces assemble(double nbar, double r, double amag, double psi, double x,
                AmplitudeConvention conv) {
    Pieces p{};
    const double nh = nbar + 0.5;
    p.n_zero = nh * std::cosh(2.0 * r) - 0.5 + amag * amag;
    const bool scaled = 2.0 * r + x > kScaledThreshold;
    if (!scaled) {
        p.n = nh * std::cosh(2.0 * r + x) - 0.5 * std::cosh(x);
        p.s = nh * std::sinh(2.0 * r + x) - 0.5 * std::sinh(x);
        p.n_tau = nh * std::cosh(2.0 * (r + x)) - 0.5;
    } else {
        const double w = std::exp(-x);
        const double n1 = nh * std::exp(2.0 * r) - 0.5;
        const double n2 = nh * std::exp(-2.0 * r) - 0.5;
        p.n = 0.5 * (n1 + n2 * w * w);
        p.s = 0.5 * (n1 - n2 * w * w);
        p.n_tau = 0.5 * nh * (std::exp(2.0 * r) + std::exp(-2.0 * r) * w * w * w * w) -
                  0.5 * w * w;
    }
    if (amag > 0.0) {
        const core::AmplitudeFactors f = scaled
                                             ? core::amplitude_factors_scaled(r, x, conv)
                                             : core::amplitude_factors(r, x, conv);
        const ComplexAmplitude eipsi = std::polar(1.0, psi);
        const double a2 = amag * amag;
        p.u = 2.0 * a2 * (f.X + (eipsi * f.Y).real());
        p.v = 2.0 * a2 * (f.X * std::cos(psi) + f.Y.real());
        p.abs_a2 = a2 * std::norm(f.X + eipsi * f.Y);
        p.n_tau += p.abs_a2;
    }
    return p;
}

double g2_from_pieces(const Pieces& p) {
    const double denom = p.n_zero * p.n_tau;
    if (!(denom > 0.0))
        throw ZeroDenominator("g2: state carries no photons, correlation undefined");
    return 1.0 + (p.n * p.n + p.s * p.s + p.u * p.n - p.v * p.s) / denom;
}

void require_squeeze(double r, const char* where) {
    if (!(r > kSqueezeEps))
        throw DegenerateSqueeze(std::string(where) +
                                ": squeeze magnitude at or below threshold; use the "
                                "displaced-thermal path");
}

double unscaled_mean(double r, double x, const Pieces& p) {
    if (2.0 * r + x <= kScaledThreshold) return p.n_tau;
    // p.n_tau carries e^{-2x}; undoing it may overflow to +inf, which is the
    // honest answer for the photon number at such lags.
    return p.n_tau * std::exp(2.0 * x);
}

}  // namespace

double mean_photon_number(const GaussianParams& g, double omega_tau, AmplitudeConvention conv) {
    g.validate();
    if (!(omega_tau >= 0.0)) throw std::invalid_argument("omega_tau must be >= 0");
    require_squeeze(g.r, "mean_photon_number");
    const Pieces p = assemble(g.nbar, g.r, g.alpha_mag, g.psi(), omega_tau, conv);
    return unscaled_mean(g.r, omega_tau, p);
}

double mean_photon_number_displaced(double nbar, double alpha_mag, double tau_over_t) {
    const double shifted = tau_over_t + 1.0;
    return alpha_mag * alpha_mag * shifted * shifted + nbar;
}

HyperbolicHelpers helpers(const GaussianParams& g, double omega_tau) {
    g.validate();
    if (!(omega_tau >= 0.0)) throw std::invalid_argument("omega_tau must be >= 0");
    require_squeeze(g.r, "helpers");
    const double x = omega_tau;
    const double nh = g.nbar + 0.5;
    const double psi = g.psi();
    const double a2 = g.alpha_mag * g.alpha_mag;
    const double cr = 1.0 / std::tanh(0.5 * g.r);
    const double ch = std::cosh(x);
    const double sh = std::sinh(x);
    const double chm1 = 2.0 * std::pow(std::sinh(0.5 * x), 2);

    HyperbolicHelpers h;
    h.n_tau = nh * std::cosh(2.0 * g.r + x) - 0.5 * ch;
    h.s_tau = nh * std::sinh(2.0 * g.r + x) - 0.5 * sh;
    const core::AmplitudeFactors f =
        core::amplitude_factors(g.r, x, AmplitudeConvention::reference);
    const ComplexAmplitude eipsi = std::polar(1.0, psi);
    h.u_tau = 2.0 * a2 * (f.X + (eipsi * f.Y).real());
    h.v_tau = 2.0 * a2 * (f.X * std::cos(psi) + f.Y.real());
    h.un_minus_vs_direct = h.u_tau * h.n_tau - h.v_tau * h.s_tau;
    // Expanded single-expression route for the same combination.
    const double b1 = 1.0 + ch + cr * sh;
    const double b2 = sh - cr * chm1;
    h.un_minus_vs_expanded =
        a2 * (b1 * (h.n_tau - h.s_tau * std::cos(psi)) +
              b2 * (h.n_tau * std::cos(psi) - h.s_tau) +
              2.0 * h.n_tau * sh * std::sin(psi));
    return h;
}

CoherencePoint g2(const GaussianParams& g, double omega_tau, AmplitudeConvention conv) {
    g.validate();
    if (!(omega_tau >= 0.0)) throw std::invalid_argument("omega_tau must be >= 0");
    require_squeeze(g.r, "g2");
    const Pieces p = assemble(g.nbar, g.r, g.alpha_mag, g.psi(), omega_tau, conv);
    CoherencePoint pt;
    pt.omega_tau = omega_tau;
    pt.tau_over_t = omega_tau / g.r;
    pt.g2 = g2_from_pieces(p);
    pt.mean_n = unscaled_mean(g.r, omega_tau, p);
    return pt;
}

CoherencePoint g2_displaced_thermal(double nbar, double alpha_mag, double tau_over_t) {
    if (!(nbar >= 0.0) || !(alpha_mag >= 0.0))
        throw std::invalid_argument("nbar and alpha_mag must be >= 0");
    if (!(tau_over_t >= 0.0)) throw std::invalid_argument("tau_over_t must be >= 0");
    const double a2 = alpha_mag * alpha_mag;
    if (a2 + nbar <= 0.0)
        throw ZeroDenominator("g2_displaced_thermal: alpha_mag = nbar = 0");
    const double shifted = tau_over_t + 1.0;
    CoherencePoint pt;
    pt.omega_tau = 0.0;
    pt.tau_over_t = tau_over_t;
    pt.g2 = 1.0 + nbar / (a2 + nbar) *
                      ((2.0 * a2 * shifted + nbar) / (a2 * shifted * shifted + nbar));
    pt.mean_n = mean_photon_number_displaced(nbar, alpha_mag, tau_over_t);
    return pt;
}

CoherencePoint g2_squeezed_thermal(double nbar, double r, double omega_tau) {
    if (!(nbar >= 0.0) || !(r >= 0.0))
        throw std::invalid_argument("nbar and r must be >= 0");
    if (!(omega_tau >= 0.0)) throw std::invalid_argument("omega_tau must be >= 0");
    if (nbar == 0.0 && r == 0.0)
        throw ZeroDenominator("g2_squeezed_thermal: r = nbar = 0");
    const Pieces p =
        assemble(nbar, r, 0.0, 0.0, omega_tau, AmplitudeConvention::reference);
    CoherencePoint pt;
    pt.omega_tau = omega_tau;
    pt.tau_over_t = r > kSqueezeEps ? omega_tau / r : 0.0;
    pt.g2 = g2_from_pieces(p);
    pt.mean_n = unscaled_mean(r, omega_tau, p);
    return pt;
}

double g2_asymptote(const GaussianParams& g, AmplitudeConvention conv) {
    g.validate();
    require_squeeze(g.r, "g2_asymptote");
    const double nh = g.nbar + 0.5;
    const double cr = 1.0 / std::tanh(0.5 * g.r);
    const double e2r = std::exp(2.0 * g.r);
    const double n1 = nh * e2r - 0.5;
    const double a2 = g.alpha_mag * g.alpha_mag;
    const double psi = g.psi();
    // Leading e^{x} coefficients of the amplitude factors.
    const double x1 = 0.5 * (1.0 + cr);
    const ComplexAmplitude y1 = conv == AmplitudeConvention::reference
                                    ? ComplexAmplitude{0.5 * (1.0 - cr), -1.0}
                                    : ComplexAmplitude{-0.5 * (1.0 + cr), 0.0};
    const ComplexAmplitude eipsi = std::polar(1.0, psi);
    const double u_hat = a2 * (x1 + (eipsi * y1).real());
    const double v_hat = a2 * (x1 * std::cos(psi) + y1.real());
    const double n_zero = nh * std::cosh(2.0 * g.r) - 0.5 + a2;
    const double m = 0.5 * nh * e2r + 0.25 * a2 * std::norm(x1 + eipsi * y1);
    return 1.0 + (0.5 * n1 * n1 + 0.5 * n1 * (u_hat - v_hat)) / (n_zero * m);
}

double g2_large_r_limit(const std::vector<double>& check_points, double nbar,
                        double alpha_mag) {
    if (check_points.empty())
        throw std::invalid_argument("g2_large_r_limit: check_points must be non-empty");
    const GaussianParams g = GaussianParams::amplitude_squeezed(nbar, 20.0, alpha_mag);
    double worst = 0.0;
    for (double x : check_points) worst = std::max(worst, std::abs(g2(g, x).g2 - 3.0));
    return worst;
}

}  // namespace g2lab::coherence
