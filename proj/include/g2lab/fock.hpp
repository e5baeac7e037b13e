#pragma once

#include <Eigen/Dense>

#include "g2lab/types.hpp"

namespace g2lab::fock {

/// Dense operator on the truncated number basis {|0>, ..., |dim-1>}.
struct FockOperator {
    Eigen::MatrixXcd entries;

    int dim() const { return static_cast<int>(entries.rows()); }
    double hermiticity_residual() const;
};

struct DensityMatrix {
    Eigen::MatrixXcd entries;

    int dim() const { return static_cast<int>(entries.rows()); }
    double trace_real() const { return entries.trace().real(); }
    /// Sum of the top `levels` diagonal populations (truncation-tail probe).
    double tail_population(int levels = 8) const;
};

/// Annihilation operator: a[n-1, n] = sqrt(n).
FockOperator annihilation(int dim);

/// H = c a^dag^2 + conj(c) a^2 + b a + conj(b) a^dag with c = tc/t, b = tb/t.
/// Hermitian by construction. Throws DimensionTooSmall if dim < 4.
FockOperator build_hamiltonian(const DpaParams& d, int dim);

/// Thermal state: diagonal with populations proportional to (nbar/(nbar+1))^n,
/// renormalized over the truncated basis.
DensityMatrix thermal_density(double nbar, int dim);

/// Heisenberg evolution e^{iH tau} X e^{-iH tau} through the Hermitian
/// eigendecomposition of H. Throws EigenFailure if it does not converge.
FockOperator evolve_operator(const FockOperator& H, const FockOperator& X, double tau);

/// Gaussian state by dynamical generation: e^{-iHt} rho0 e^{iHt} with the
/// Hamiltonian from invert_to_dpa.
DensityMatrix gaussian_density(const GaussianParams& g, int dim);

/// Same state built as D(alpha) S(xi) rho0 S(-xi) D(-alpha) from explicit
/// displacement and squeeze operators. Agrees with gaussian_density to
/// 1e-8 in trace distance (it validates the coefficient inversion).
DensityMatrix gaussian_density_displace_squeeze(const GaussianParams& g, int dim);

/// exp(alpha a^dag - conj(alpha) a), scaling-and-squaring.
Eigen::MatrixXcd displacement_operator(ComplexAmplitude alpha, int dim);

/// exp(-xi/2 a^dag^2 + conj(xi)/2 a^2), scaling-and-squaring.
Eigen::MatrixXcd squeeze_operator(ComplexAmplitude xi, int dim);

/// (1/2) * sum |eigenvalues(rho1 - rho2)|.
double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

struct OracleResult {
    double g2 = 0.0;
    int dim = 0;
    /// Largest top-8-level population among the states entering the traces.
    double tail = 0.0;
};

struct OracleOptions {
    int dim_max = kOracleDimMaxDefault;
    /// Tail population both the prepared and the lag-evolved state must stay
    /// under before a truncation is accepted.
    double tail_tol = 1e-10;
};

/// Brute-force evaluation of g2 directly from the trace definition:
/// prepare rho_G, evolve the annihilation operator by the lag, and take the
/// four-point and number traces. The basis size starts at kOracleDimStart
/// and doubles until the truncation-tail rule is met. Throws TruncationError
/// when the rule cannot be met within dim_max, and for parameters outside
/// the documented verification envelope (r <= 1, |alpha| <= 2, nbar <= 2,
/// omega_tau <= 3).
OracleResult g2_oracle(const GaussianParams& g, double omega_tau,
                       const OracleOptions& opts = {});

/// Fixed-dimension variant (no adaptive rule, no envelope check); used by
/// convergence tests and by the adaptive ladder.
OracleResult g2_oracle_at_dim(const GaussianParams& g, double omega_tau, int dim);

/// Diagnostic cross-check: evaluates the same correlation from the thermal
/// state with both annihilations shifted by the preparation time, instead of
/// from the prepared state. Equal to g2_oracle_at_dim up to truncation
/// effects.
double g2_oracle_from_thermal_frame(const GaussianParams& g, double omega_tau, int dim);

}  // namespace g2lab::fock
