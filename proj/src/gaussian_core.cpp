#include "g2lab/gaussian_core.hpp"

#include <cmath>

namespace g2lab::core {

namespace {

constexpr ComplexAmplitude kI{0.0, 1.0};

double coth_half(double r) { return 1.0 / std::tanh(0.5 * r); }

void require_squeeze(double r, const char* where) {
    if (!(r > kSqueezeEps))
        throw DegenerateSqueeze(std::string(where) +
                                ": squeeze magnitude at or below threshold; use the r = 0 "
                                "displaced-thermal path");
}

}  // namespace

DpaParams invert_to_dpa(const GaussianParams& g) {
    g.validate();
    require_squeeze(g.r, "invert_to_dpa");
    const ComplexAmplitude alpha = g.alpha();
    const ComplexAmplitude eith = std::polar(1.0, g.theta);
    DpaParams d;
    d.tc = -0.5 * kI * g.r * eith;
    d.tb = -0.5 * kI * (alpha / eith + std::conj(alpha) * coth_half(g.r)) * g.r;
    d.chi = reduce_phase(std::arg(d.tc));
    d.omega = g.r / g.prep_time;
    return d;
}

ComplexAmplitude xi_of_tau(const DpaParams& d, double tau) {
    return 2.0 * kI * d.tc * (tau / d.prep_time());
}

ComplexAmplitude alpha_of_tau(const DpaParams& d, double tau) {
    const double abs_tc = std::abs(d.tc);
    if (abs_tc == 0.0) {
        if (std::abs(d.tb) == 0.0) return {0.0, 0.0};
        throw DegenerateSqueeze("alpha_of_tau: quadratic coefficient vanishes");
    }
    const double x = d.omega * tau;
    const double sh = std::sinh(x);
    const double chm1 = 2.0 * std::pow(std::sinh(0.5 * x), 2);
    // b / (2|c|) = tb / (2|tc|): the preparation time cancels.
    return -kI * std::conj(d.tb) * sh / (2.0 * abs_tc) +
           d.tb * std::polar(1.0, d.chi) * chm1 / (2.0 * abs_tc);
}

AmplitudeFactors amplitude_factors(double r, double x, AmplitudeConvention conv) {
    require_squeeze(r, "amplitude_factors");
    const double cr = coth_half(r);
    const double ch = std::cosh(x);
    const double sh = std::sinh(x);
    const double chm1 = 2.0 * std::pow(std::sinh(0.5 * x), 2);
    AmplitudeFactors f;
    f.X = ch + 0.5 * cr * sh - 0.5 * chm1;
    if (conv == AmplitudeConvention::reference)
        f.Y = {0.5 * sh - 0.5 * cr * chm1, -sh};
    else
        f.Y = {-0.5 * sh - 0.5 * cr * chm1, 0.0};
    return f;
}

AmplitudeFactors amplitude_factors_scaled(double r, double x, AmplitudeConvention conv) {
    require_squeeze(r, "amplitude_factors_scaled");
    const double cr = coth_half(r);
    const double w = std::exp(-x);
    const double one_m_w = -std::expm1(-x);
    const double ch = 0.5 * (1.0 + w * w);
    const double sh = 0.5 * (1.0 - w * w);
    const double chm1 = 0.5 * one_m_w * one_m_w;
    AmplitudeFactors f;
    f.X = ch + 0.5 * cr * sh - 0.5 * chm1;
    if (conv == AmplitudeConvention::reference)
        f.Y = {0.5 * sh - 0.5 * cr * chm1, -sh};
    else
        f.Y = {-0.5 * sh - 0.5 * cr * chm1, 0.0};
    return f;
}

ComplexAmplitude displaced_amplitude(const GaussianParams& g, double omega_tau,
                                     AmplitudeConvention conv) {
    g.validate();
    if (!(omega_tau >= 0.0)) throw std::invalid_argument("omega_tau must be >= 0");
    if (omega_tau == 0.0) return g.alpha();
    const AmplitudeFactors f = amplitude_factors(g.r, omega_tau, conv);
    return g.alpha() * f.X + std::conj(g.alpha()) * std::polar(1.0, g.theta) * f.Y;
}

double abs_A_squared(const GaussianParams& g, double omega_tau, AmplitudeConvention conv) {
    g.validate();
    if (!(omega_tau >= 0.0)) throw std::invalid_argument("omega_tau must be >= 0");
    const AmplitudeFactors f = amplitude_factors(g.r, omega_tau, conv);
    return g.alpha_mag * g.alpha_mag * std::norm(f.X + std::polar(1.0, g.psi()) * f.Y);
}

GaussianParams round_trip(const GaussianParams& g) {
    const DpaParams d = invert_to_dpa(g);
    const double t = d.prep_time();
    const ComplexAmplitude xi_t = xi_of_tau(d, t);
    const ComplexAmplitude alpha_t = alpha_of_tau(d, t);
    GaussianParams out;
    out.nbar = g.nbar;
    out.prep_time = g.prep_time;
    out.r = std::abs(xi_t);
    out.theta = reduce_phase(std::arg(xi_t));
    out.alpha_mag = std::abs(alpha_t);
    out.phi = out.alpha_mag > 1e-13 ? reduce_phase(std::arg(alpha_t)) : 0.0;
    return out;
}

}  // namespace g2lab::core
