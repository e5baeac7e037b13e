#pragma once

#include <vector>

#include "g2lab/types.hpp"

namespace g2lab::coherence {

/// One evaluation of the second-order coherence function.
struct CoherencePoint {
    double omega_tau = 0.0;
    double tau_over_t = 0.0;
    double g2 = 0.0;
    double mean_n = 0.0;
};

/// The four hyperbolic helper functions entering the master closed form,
/// plus the combination u*n - v*s computed along two independent algebraic
/// routes (term by term, and through its expanded single-expression form).
struct HyperbolicHelpers {
    double n_tau = 0.0;
    double s_tau = 0.0;
    double u_tau = 0.0;
    double v_tau = 0.0;
    double un_minus_vs_direct = 0.0;
    double un_minus_vs_expanded = 0.0;
};

/// <a^dag(tau) a(tau)> = (nbar + 1/2) cosh[2(r + x)] - 1/2 + |A(x)|^2,
/// x = omega*tau. Strictly increasing in x. Throws DegenerateSqueeze for
/// r <= kSqueezeEps (use mean_photon_number_displaced instead).
double mean_photon_number(const GaussianParams& g, double omega_tau,
                          AmplitudeConvention conv = AmplitudeConvention::reference);

/// Photon number of the displaced thermal state (r = 0 path):
/// |alpha|^2 (tau/t + 1)^2 + nbar.
double mean_photon_number_displaced(double nbar, double alpha_mag, double tau_over_t);

/// Helper functions at lag x (reference convention for u, v).
HyperbolicHelpers helpers(const GaussianParams& g, double omega_tau);

/// Master closed form:
/// g2 = 1 + [n^2 + s^2 + u n - v s] / (<n(0)> <n(tau)>), finite for all lags.
/// Throws DegenerateSqueeze for r <= kSqueezeEps, ZeroDenominator if the
/// state carries no photons at all.
CoherencePoint g2(const GaussianParams& g, double omega_tau,
                  AmplitudeConvention conv = AmplitudeConvention::reference);

/// r = 0 limit (displaced thermal state), a function of tau/t only:
/// g2 = 1 + nbar/(|alpha|^2+nbar) * (2|alpha|^2(tt+1)+nbar)/(|alpha|^2(tt+1)^2+nbar).
/// Decays as a power of tau/t toward 1. Throws ZeroDenominator if
/// alpha_mag = nbar = 0.
CoherencePoint g2_displaced_thermal(double nbar, double alpha_mag, double tau_over_t);

/// alpha = 0 limit (squeezed thermal state); always >= 1.
/// Throws ZeroDenominator if r = nbar = 0.
CoherencePoint g2_squeezed_thermal(double nbar, double r, double omega_tau);

/// Analytic lag -> infinity limit of g2, from the leading e^{x} / e^{2x}
/// coefficients of the numerator and denominator. Matches g2 at x = 40 to
/// better than 1e-8. Throws DegenerateSqueeze for r <= kSqueezeEps.
double g2_asymptote(const GaussianParams& g,
                    AmplitudeConvention conv = AmplitudeConvention::reference);

/// Probe of the strong-squeezing limit: evaluates g2 at r = 20 for the given
/// (nbar, alpha_mag, theta = 2 phi) at each lag and returns the largest
/// deviation from 3.
double g2_large_r_limit(const std::vector<double>& check_points, double nbar = 0.1,
                        double alpha_mag = 0.8);

}  // namespace g2lab::coherence
