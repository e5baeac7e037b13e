#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "g2lab/types.hpp"

namespace g2lab::analysis {

/// Classical bounds a c-number field must satisfy. `initial_dominance` is
/// g2(0) >= g2(tau); `mirror` is |g2(0) - 1| > |g2(tau) - 1| (the correlation
/// can never be farther from unity than it started).
enum class ClassicalInequality { initial_dominance, mirror };

struct ViolationInterval {
    double lo = 0.0;
    double hi = 0.0;
    ClassicalInequality which = ClassicalInequality::initial_dominance;
    /// True when the violation persists past the scanned range (decided by
    /// comparing the asymptote against the crossing target).
    bool unbounded = false;
};

struct RegimeReport {
    double g2_zero = 0.0;
    bool sub_poissonian = false;
    /// Lags where g2(x) = g2(0), ascending, refined to 1e-10.
    std::vector<double> crossings_g2zero;
    /// Lags where g2(x) = 2 - g2(0), ascending, refined to 1e-10.
    std::vector<double> crossings_mirror;
    /// Interior local minimum, when one exists in the scanned range.
    std::optional<std::pair<double, double>> minimum;  // (lag, g2)
    double asymptote = 0.0;
    std::vector<ViolationInterval> violation_intervals;
};

/// Scan g2 on a uniform grid over [0, omega_tau_max], refine every crossing
/// of g2(0) and of 2 - g2(0) by bisection to 1e-10 in the lag, locate the
/// interior minimum by golden-section search, and label the intervals where
/// either classical inequality fails. grid >= 64.
RegimeReport classify(const GaussianParams& g, double omega_tau_max, int grid = 4096);

/// Same scan for the r = 0 path, over tau/t. Always reports zero violations:
/// the displaced thermal correlation is strictly classical.
RegimeReport classify_displaced_thermal(double nbar, double alpha_mag, double tau_over_t_max,
                                        int grid = 4096);

/// Result of minimizing g2 over the displacement magnitude at fixed
/// (nbar, r, lag), theta = 2 phi.
struct AlphaOptimum {
    double alpha_mag = 0.0;
    double g2_min = 0.0;
    /// True when the minimizing branch exists (quadratic coefficient B < 0,
    /// equivalently r > ln(2 nbar + 1)/2).
    bool branch_valid = false;
    /// The discarded lower-sign root of the quadratic, for inspection only.
    std::optional<double> lower_root_alpha_sq;
};

/// Quadratic-root minimization of g2 over |alpha|^2 at fixed lag. When the
/// branch condition B < 0 holds, returns the upper-sign root and the
/// corresponding g2; otherwise branch_valid = false. Throws DegenerateSqueeze
/// for r <= kSqueezeEps and NegativeDiscriminant if the radicand is negative.
AlphaOptimum minimize_over_alpha(double nbar, double r, double omega_tau);

/// Closed form of the lag-zero optimal displacement,
///   |alpha| = 1/2 sqrt[(2n+1)(e^{4r}-1)((2n+1)e^{2r}-1) / (e^{2r}-2n-1)],
/// defined for r > ln(2 nbar + 1)/2 (throws ExistenceViolation otherwise).
/// Equals minimize_over_alpha(nbar, r, 0) to 1e-10.
AlphaOptimum alpha_optimum_tau0(double nbar, double r);

/// Lag-zero correlation minimum over the displacement for a squeezed vacuum,
/// expressed as a function of the optimal |alpha|: picks the squeeze
/// r = ln(4|alpha|^2 + 1)/4 whose optimal displacement is |alpha| and returns
///   2 + [sinh(2r)(sinh(2r) - 4|alpha|^2) - 4|alpha|^4] / (cosh(2r) - 1 + 2|alpha|^2)^2.
/// Tends to 0 as |alpha| -> 0 and to 1 as |alpha| -> infinity.
double g2_min_vacuum(double alpha_mag);

/// Squeeze whose lag-zero optimal displacement equals alpha_mag (nbar = 0).
double matched_squeeze(double alpha_mag);

// Bracketing helpers shared by the scans (also used by tests as independent
// one-dimensional oracles).
double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol);
double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double xtol);

}  // namespace g2lab::analysis
