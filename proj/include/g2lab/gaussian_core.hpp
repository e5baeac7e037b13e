#pragma once

#include "g2lab/types.hpp"

namespace g2lab::core {

/// Amplifier coefficients that prepare the given Gaussian state in time
/// prep_time starting from a thermal state:
///
///   tc = -i/2 * r * e^{i theta}
///   tb = -i/2 * (alpha e^{-i theta} + conj(alpha) coth(r/2)) * r
///
/// with omega * prep_time = r and e^{i theta} = i e^{i chi}.
/// Throws DegenerateSqueeze for r <= kSqueezeEps.
DpaParams invert_to_dpa(const GaussianParams& g);

/// xi(tau) = 2 i c tau, the accumulated squeeze after a lag tau; xi(0) = 0.
ComplexAmplitude xi_of_tau(const DpaParams& d, double tau);

/// alpha(tau) = -i conj(b) sinh(omega tau)/(2|c|)
///              + b e^{i chi} (cosh(omega tau) - 1)/(2|c|);  alpha(0) = 0.
ComplexAmplitude alpha_of_tau(const DpaParams& d, double tau);

/// Displaced amplitude A at lag x = omega*tau. A(0) = alpha exactly.
/// Throws DegenerateSqueeze when r <= kSqueezeEps and x > 0.
ComplexAmplitude displaced_amplitude(const GaussianParams& g, double omega_tau,
                                     AmplitudeConvention conv = AmplitudeConvention::reference);

/// |A(x)|^2 through the closed form that depends only on |alpha|, r, x and
/// theta - 2*phi (reference convention). Agrees with
/// |displaced_amplitude(...)|^2 to better than 1e-12 relative.
/// Throws DegenerateSqueeze for r <= kSqueezeEps.
double abs_A_squared(const GaussianParams& g, double omega_tau,
                     AmplitudeConvention conv = AmplitudeConvention::reference);

/// Consistency harness: invert to amplifier coefficients, evaluate xi and
/// alpha at the preparation time, and reconstruct the state parameters.
/// The result equals the input to 1e-10 for every valid state.
GaussianParams round_trip(const GaussianParams& g);

// Shared amplitude machinery. A(x) = alpha * X(x) + conj(alpha) e^{i theta} * Y(x)
// with X real; Y is real in the dynamic convention and has imaginary part
// -sinh(x) in the reference convention.
struct AmplitudeFactors {
    double X;
    ComplexAmplitude Y;
};

/// Factors at lag x for squeeze magnitude r. Requires r > kSqueezeEps.
AmplitudeFactors amplitude_factors(double r, double x, AmplitudeConvention conv);

/// Same factors scaled by e^{-x}; stays finite for arbitrarily large lags.
AmplitudeFactors amplitude_factors_scaled(double r, double x, AmplitudeConvention conv);

}  // namespace g2lab::core
