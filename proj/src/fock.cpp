#include "g2lab/fock.hpp"

#include <cmath>

#include "g2lab/coherence.hpp"
#include "g2lab/gaussian_core.hpp"

namespace g2lab::fock {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXd;

struct Eigensystem {
    VectorXd w;
    MatrixXcd v;

    /// e^{-iH tau} = V e^{-i w tau} V^dag
    MatrixXcd propagator(double tau) const {
        const Eigen::VectorXcd phases =
            (ComplexAmplitude(0.0, -1.0) * tau * w.cast<ComplexAmplitude>().array())
                .exp()
                .matrix();
        return v * phases.asDiagonal() * v.adjoint();
    }
};

Eigensystem decompose(const MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw EigenFailure("Hermitian eigendecomposition did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Diagonal of U M U^dag without forming the full product.
VectorXd conjugated_diagonal(const MatrixXcd& u, const MatrixXcd& m) {
    const MatrixXcd um = u * m;
    return um.cwiseProduct(u.conjugate()).rowwise().sum().real();
}

/// a M: (aM)[i, j] = sqrt(i+1) M[i+1, j]; O(dim^2).
MatrixXcd a_times(const MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    MatrixXcd out = MatrixXcd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) out.row(i) = std::sqrt(double(i + 1)) * m.row(i + 1);
    return out;
}

/// M a^dag: (M a^dag)[i, j] = sqrt(j+1) M[i, j+1]; O(dim^2).
MatrixXcd times_adag(const MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    MatrixXcd out = MatrixXcd::Zero(n, n);
    for (int j = 0; j + 1 < n; ++j) out.col(j) = std::sqrt(double(j + 1)) * m.col(j + 1);
    return out;
}

double number_weighted_sum(const VectorXd& diag) {
    double acc = 0.0;
    for (int n = 0; n < static_cast<int>(diag.size()); ++n) acc += n * diag(n);
    return acc;
}

MatrixXcd expm_scaling_squaring(const MatrixXcd& m) {
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.25) {
        scale *= 0.5;
        ++squarings;
    }
    const MatrixXcd t = m * scale;
    const int n = static_cast<int>(m.rows());
    MatrixXcd sum = MatrixXcd::Identity(n, n);
    MatrixXcd term = MatrixXcd::Identity(n, n);
    for (int k = 1; k <= 24; ++k) {
        term = (term * t) / double(k);
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) break;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

struct OraclePieces {
    Eigensystem es;
    MatrixXcd rho_g;
};

OraclePieces prepare(const GaussianParams& g, int dim) {
    const DpaParams d = core::invert_to_dpa(g);
    const FockOperator h = build_hamiltonian(d, dim);
    OraclePieces p{decompose(h.entries), {}};
    const MatrixXcd u_t = p.es.propagator(d.prep_time());
    p.rho_g = u_t * thermal_density(g.nbar, dim).entries * u_t.adjoint();
    return p;
}

}  // namespace

double FockOperator::hermiticity_residual() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::tail_population(int levels) const {
    const int n = dim();
    const int lo = std::max(0, n - levels);
    double acc = 0.0;
    for (int k = lo; k < n; ++k) acc += entries(k, k).real();
    return acc;
}

FockOperator annihilation(int dim) {
    if (dim < 1) throw DimensionTooSmall("annihilation: dim must be >= 1");
    MatrixXcd a = MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return {a};
}

FockOperator build_hamiltonian(const DpaParams& d, int dim) {
    if (dim < 4) throw DimensionTooSmall("build_hamiltonian: dim must be >= 4");
    const double t = d.prep_time();
    const ComplexAmplitude c = d.tc / t;
    const ComplexAmplitude b = d.tb / t;
    const MatrixXcd a = annihilation(dim).entries;
    const MatrixXcd ad = a.adjoint();
    MatrixXcd h = c * (ad * ad) + std::conj(c) * (a * a) + b * a + std::conj(b) * ad;
    return {std::move(h)};
}

DensityMatrix thermal_density(double nbar, int dim) {
    if (dim < 4) throw DimensionTooSmall("thermal_density: dim must be >= 4");
    if (!(nbar >= 0.0)) throw std::invalid_argument("nbar must be >= 0");
    Eigen::VectorXd p(dim);
    if (nbar == 0.0) {
        p.setZero();
        p(0) = 1.0;
    } else {
        const double q = nbar / (nbar + 1.0);
        double w = 1.0;
        for (int n = 0; n < dim; ++n, w *= q) p(n) = w;
        p /= p.sum();
    }
    MatrixXcd rho = MatrixXcd::Zero(dim, dim);
    rho.diagonal() = p.cast<ComplexAmplitude>();
    return {std::move(rho)};
}

FockOperator evolve_operator(const FockOperator& h, const FockOperator& x, double tau) {
    if (h.dim() != x.dim()) throw std::invalid_argument("evolve_operator: dimension mismatch");
    const Eigensystem es = decompose(h.entries);
    const MatrixXcd u = es.propagator(tau);  // e^{-iH tau}
    return {u.adjoint() * x.entries * u};
}

DensityMatrix gaussian_density(const GaussianParams& g, int dim) {
    return {prepare(g, dim).rho_g};
}

DensityMatrix gaussian_density_displace_squeeze(const GaussianParams& g, int dim) {
    g.validate();
    const MatrixXcd s = squeeze_operator(g.xi(), dim);
    const MatrixXcd d = displacement_operator(g.alpha(), dim);
    const MatrixXcd ds = d * s;
    return {ds * thermal_density(g.nbar, dim).entries * ds.adjoint()};
}

Eigen::MatrixXcd displacement_operator(ComplexAmplitude alpha, int dim) {
    const MatrixXcd a = annihilation(dim).entries;
    return expm_scaling_squaring(alpha * a.adjoint() - std::conj(alpha) * a);
}

Eigen::MatrixXcd squeeze_operator(ComplexAmplitude xi, int dim) {
    const MatrixXcd a = annihilation(dim).entries;
    const MatrixXcd ad = a.adjoint();
    return expm_scaling_squaring(-0.5 * xi * (ad * ad) + 0.5 * std::conj(xi) * (a * a));
}

double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    const MatrixXcd diff = rho1.entries - rho2.entries;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw EigenFailure("trace_distance: eigendecomposition did not converge");
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

OracleResult g2_oracle_at_dim(const GaussianParams& g, double omega_tau, int dim) {
    g.validate();
    if (!(omega_tau >= 0.0)) throw std::invalid_argument("omega_tau must be >= 0");
    const OraclePieces p = prepare(g, dim);
    const double tau = omega_tau * g.prep_time / g.r;  // tau = x / Omega
    const MatrixXcd u_tau = p.es.propagator(tau);

    // Four-point and number traces, written with the lag evolution moved onto
    // the states (identical to conjugating the operators, since the
    // propagator from the eigendecomposition is exactly unitary):
    //   <n(tau)>      = tr[(U rho U^dag) n]
    //   numerator     = tr[(U a rho a^dag U^dag) n]
    const MatrixXcd sigma = a_times(times_adag(p.rho_g));
    const VectorXd rho_diag = p.rho_g.diagonal().real();
    const VectorXd rho_tau_diag = conjugated_diagonal(u_tau, p.rho_g);
    const VectorXd sigma_tau_diag = conjugated_diagonal(u_tau, sigma);

    const double d1 = number_weighted_sum(rho_diag);
    const double d2 = number_weighted_sum(rho_tau_diag);
    const double num = number_weighted_sum(sigma_tau_diag);

    OracleResult res;
    res.g2 = num / (d1 * d2);
    res.dim = dim;
    double tail_prepared = 0.0;
    double tail_evolved = 0.0;
    for (int k = std::max(0, dim - 8); k < dim; ++k) {
        tail_prepared += rho_diag(k);
        tail_evolved += rho_tau_diag(k);
    }
    res.tail = std::max(tail_prepared, tail_evolved);
    return res;
}

OracleResult g2_oracle(const GaussianParams& g, double omega_tau, const OracleOptions& opts) {
    g.validate();
    if (!(g.r > kSqueezeEps))
        throw DegenerateSqueeze("g2_oracle: squeeze magnitude at or below threshold");
    if (g.r > 1.0 || g.alpha_mag > 2.0 || g.nbar > 2.0 || omega_tau > 3.0)
        throw TruncationError(
            "g2_oracle: parameters outside the verification envelope "
            "(r <= 1, |alpha| <= 2, nbar <= 2, omega_tau <= 3)");
    // A priori occupancy guard: when the analytic photon number already
    // implies tails far past the cap, skip the ladder.
    const double occupancy =
        coherence::mean_photon_number(g, omega_tau, AmplitudeConvention::dynamic);
    if (occupancy > opts.dim_max / 3.0)
        throw TruncationError("g2_oracle: estimated occupancy " + std::to_string(occupancy) +
                              " exceeds what dim_max " + std::to_string(opts.dim_max) +
                              " can resolve");
    OracleResult last{};
    for (int dim = kOracleDimStart; dim <= opts.dim_max; dim *= 2) {
        last = g2_oracle_at_dim(g, omega_tau, dim);
        if (last.tail < opts.tail_tol) return last;
    }
    throw TruncationError("g2_oracle: tail population " + std::to_string(last.tail) +
                          " at dim " + std::to_string(last.dim) +
                          " still above tolerance; raise dim_max");
}

double g2_oracle_from_thermal_frame(const GaussianParams& g, double omega_tau, int dim) {
    const DpaParams d = core::invert_to_dpa(g);
    const FockOperator h = build_hamiltonian(d, dim);
    const double t = d.prep_time();
    const double tau = omega_tau / d.omega;
    const MatrixXcd a = annihilation(dim).entries;
    const MatrixXcd a_t = evolve_operator(h, {a}, t).entries;
    const MatrixXcd a_tt = evolve_operator(h, {a}, t + tau).entries;
    const MatrixXcd rho0 = thermal_density(g.nbar, dim).entries;
    const double num =
        (rho0 * a_t.adjoint() * a_tt.adjoint() * a_tt * a_t).trace().real();
    const double d1 = (rho0 * a_t.adjoint() * a_t).trace().real();
    const double d2 = (rho0 * a_tt.adjoint() * a_tt).trace().real();
    return num / (d1 * d2);
}

}  // namespace g2lab::fock
