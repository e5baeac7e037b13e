#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace g2lab {

using ComplexAmplitude = std::complex<double>;

/// Squeeze magnitudes at or below this are treated as degenerate: the
/// inversion to amplifier coefficients needs coth(r/2), which blows up as
/// r -> 0. Callers must switch to the displaced-thermal path instead.
inline constexpr double kSqueezeEps = 1e-8;

/// Truncated-basis sizes the brute-force verifier will consider.
inline constexpr int kOracleDimStart = 32;
inline constexpr int kOracleDimMaxDefault = 1024;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct DegenerateSqueeze : std::runtime_error {
    explicit DegenerateSqueeze(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : std::runtime_error {
    explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeDiscriminant : std::runtime_error {
    explicit NegativeDiscriminant(const std::string& what) : std::runtime_error(what) {}
};

struct ExistenceViolation : std::runtime_error {
    explicit ExistenceViolation(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionTooSmall : std::runtime_error {
    explicit DimensionTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct EigenFailure : std::runtime_error {
    explicit EigenFailure(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Amplitude convention
// ---------------------------------------------------------------------------

/// The closed-form correlation functions need the displaced amplitude A(tau)
/// of the field after a lag tau. Two conventions for its conjugate-quadrature
/// term are implemented:
///
///   reference - the form used for every tabulated reference value and curve
///               in this project (regime analysis, figure data, optimal
///               displacements). Default everywhere.
///   dynamic   - the amplitude obtained by composing the generating evolution
///               itself; this is the form a direct truncated-basis simulation
///               of the amplifier Hamiltonian reproduces.
///
/// The two differ by a phase factor on the conjugate term and give different
/// correlations for tau > 0 whenever the state is displaced. The oracle
/// subcommand and the verification suite quantify the difference.
enum class AmplitudeConvention { reference, dynamic };

// ---------------------------------------------------------------------------
// Parameter types
// ---------------------------------------------------------------------------

/// Displaced-squeezed thermal state parameters plus the preparation time.
///
/// nbar      mean thermal photon number, >= 0
/// r         squeeze magnitude, >= 0
/// theta     squeeze phase, stored reduced to [0, 2*pi)
/// alpha_mag displacement magnitude |alpha|, >= 0
/// phi       displacement phase, stored reduced to [0, 2*pi)
/// prep_time duration t of the amplifier evolution that prepares the state
struct GaussianParams {
    double nbar = 0.0;
    double r = 0.0;
    double theta = 0.0;
    double alpha_mag = 0.0;
    double phi = 0.0;
    double prep_time = 1.0;

    /// theta - 2*phi, the only phase combination observables depend on.
    double psi() const;

    ComplexAmplitude alpha() const;
    ComplexAmplitude xi() const;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    /// Validating factory; reduces phases to [0, 2*pi) and canonicalizes
    /// phi = 0 when alpha_mag = 0.
    static GaussianParams create(double nbar, double r, double theta, double alpha_mag,
                                 double phi, double prep_time = 1.0);

    /// State with phi = 0 and theta = psi, i.e. theta - 2*phi = psi.
    static GaussianParams with_relative_phase(double nbar, double r, double alpha_mag,
                                              double psi, double prep_time = 1.0);

    /// Amplitude-quadrature squeezing (theta = 2*phi = 0), the choice that
    /// minimizes intensity fluctuations.
    static GaussianParams amplitude_squeezed(double nbar, double r, double alpha_mag,
                                             double prep_time = 1.0);
};

/// Degenerate-parametric-amplifier Hamiltonian coefficients, hbar = 1.
/// tc and tb are the quadratic and linear coefficients multiplied by the
/// preparation time; omega = 2|c| is the amplifier frequency, chi = arg c.
struct DpaParams {
    ComplexAmplitude tc;
    ComplexAmplitude tb;
    double chi = 0.0;
    double omega = 0.0;

    /// Preparation time recovered from r = 2|tc| and omega = r/t.
    double prep_time() const;
};

/// Reduce an angle to [0, 2*pi).
double reduce_phase(double angle);

}  // namespace g2lab
