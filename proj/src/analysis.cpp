#include "g2lab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "g2lab/coherence.hpp"

namespace g2lab::analysis {

namespace {

constexpr double kRootTol = 1e-10;

double coth_half(double r) { return 1.0 / std::tanh(0.5 * r); }

/// Grid scan + refinement over a generic correlation curve.
RegimeReport scan(const std::function<double(double)>& f, double max_lag, int grid,
                  double asymptote) {
    if (!(max_lag > 0.0)) throw std::invalid_argument("scan range must be > 0");
    if (grid < 64) throw std::invalid_argument("grid must be >= 64");

    std::vector<double> xs(static_cast<size_t>(grid));
    std::vector<double> vs(static_cast<size_t>(grid));
    const double step = max_lag / (grid - 1);
    for (int i = 0; i < grid; ++i) xs[static_cast<size_t>(i)] = step * i;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid; ++i) vs[static_cast<size_t>(i)] = f(xs[static_cast<size_t>(i)]);

    RegimeReport rep;
    rep.g2_zero = vs[0];
    rep.sub_poissonian = rep.g2_zero < 1.0;
    rep.asymptote = asymptote;

    auto find_crossings = [&](double target) {
        std::vector<double> roots;
        for (int i = 0; i + 1 < grid; ++i) {
            const double a = vs[static_cast<size_t>(i)] - target;
            const double b = vs[static_cast<size_t>(i + 1)] - target;
            if (a == 0.0) {
                // Exact grid hit: count it only as an isolated zero, not as a
                // segment of a locally constant curve (and never the origin,
                // where g2(0) - g2(0) = 0 trivially).
                if (i > 0 && i + 1 < grid &&
                    (vs[static_cast<size_t>(i - 1)] - target) * b < 0.0)
                    roots.push_back(xs[static_cast<size_t>(i)]);
            } else if (a * b < 0.0) {
                roots.push_back(bisect([&](double x) { return f(x) - target; },
                                       xs[static_cast<size_t>(i)], xs[static_cast<size_t>(i + 1)],
                                       kRootTol));
            }
        }
        return roots;
    };
    rep.crossings_g2zero = find_crossings(rep.g2_zero);
    rep.crossings_mirror = find_crossings(2.0 - rep.g2_zero);

    // Interior local minimum: bracket the global interior grid minimum.
    int imin = 0;
    for (int i = 1; i < grid; ++i)
        if (vs[static_cast<size_t>(i)] < vs[static_cast<size_t>(imin)]) imin = i;
    if (imin > 0 && imin + 1 < grid) {
        const double xm = golden_section_min(f, xs[static_cast<size_t>(imin - 1)],
                                             xs[static_cast<size_t>(imin + 1)], kRootTol);
        rep.minimum = std::make_pair(xm, f(xm));
    }

    // Violation intervals, boundaries taken from the refined crossings. When
    // the asymptote still violates the inequality past the scan range, the
    // final interval is flagged unbounded; when the violation only sets in
    // beyond the range (asymptote violates but the tail of the scan does
    // not), a degenerate open marker at max_lag records it.
    auto build_intervals = [&](const std::vector<double>& bounds,
                               const std::function<bool(double)>& violated,
                               const bool tail_violated, ClassicalInequality which) {
        std::vector<double> edges;
        edges.push_back(0.0);
        for (double b : bounds)
            if (b > 0.0 && b < max_lag) edges.push_back(b);
        std::sort(edges.begin(), edges.end());
        edges.push_back(max_lag);
        bool last_segment_violated = false;
        for (size_t k = 0; k + 1 < edges.size(); ++k) {
            const double mid = 0.5 * (edges[k] + edges[k + 1]);
            const bool v = violated(mid);
            if (k + 2 == edges.size()) last_segment_violated = v;
            if (!v) continue;
            ViolationInterval iv;
            iv.lo = edges[k];
            iv.hi = edges[k + 1];
            iv.which = which;
            iv.unbounded = (k + 2 == edges.size()) && tail_violated;
            rep.violation_intervals.push_back(iv);
        }
        if (!last_segment_violated && tail_violated)
            rep.violation_intervals.push_back({max_lag, max_lag, which, true});
    };

    const double g0 = rep.g2_zero;
    build_intervals(
        rep.crossings_g2zero, [&](double x) { return f(x) > g0; }, asymptote > g0,
        ClassicalInequality::initial_dominance);

    const double d0 = std::abs(g0 - 1.0);
    std::vector<double> mirror_bounds = rep.crossings_g2zero;
    mirror_bounds.insert(mirror_bounds.end(), rep.crossings_mirror.begin(),
                         rep.crossings_mirror.end());
    build_intervals(
        mirror_bounds, [&](double x) { return std::abs(f(x) - 1.0) > d0; },
        std::abs(asymptote - 1.0) > d0, ClassicalInequality::mirror);

    return rep;
}

}  // namespace

double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    double fhi = f(hi);
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::invalid_argument("bisect: no sign change in bracket");
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
        if (c >= d) break;
    }
    return 0.5 * (a + b);
}

RegimeReport classify(const GaussianParams& g, double omega_tau_max, int grid) {
    g.validate();
    const double asym = coherence::g2_asymptote(g);
    return scan([&](double x) { return coherence::g2(g, x).g2; }, omega_tau_max, grid, asym);
}

RegimeReport classify_displaced_thermal(double nbar, double alpha_mag, double tau_over_t_max,
                                        int grid) {
    const double asym = alpha_mag > 0.0 ? 1.0 : 2.0;
    return scan([&](double tt) { return coherence::g2_displaced_thermal(nbar, alpha_mag, tt).g2; },
                tau_over_t_max, grid, asym);
}

AlphaOptimum minimize_over_alpha(double nbar, double r, double omega_tau) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("nbar must be >= 0");
    if (!(omega_tau >= 0.0)) throw std::invalid_argument("omega_tau must be >= 0");
    if (!(r > kSqueezeEps))
        throw DegenerateSqueeze("minimize_over_alpha: squeeze magnitude at or below threshold");

    const double x = omega_tau;
    const double nh = nbar + 0.5;
    const double cr = coth_half(r);
    const double ch = std::cosh(x);
    const double sh = std::sinh(x);
    const double chm1 = 2.0 * std::pow(std::sinh(0.5 * x), 2);
    const double n = nh * std::cosh(2.0 * r + x) - 0.5 * ch;
    const double s = nh * std::sinh(2.0 * r + x) - 0.5 * sh;

    const double ca = n * n + s * s;
    const double cb = (1.0 + ch + cr * sh + sh - cr * chm1) * (n - s);
    const double cc = nh * std::cosh(2.0 * r) - 0.5;
    const double cd =
        std::pow(0.5 * ch + 0.5 * cr * sh + 0.5 + 0.5 * sh - 0.5 * cr * chm1, 2) + sh * sh;
    const double ce = nh * std::cosh(2.0 * r + 2.0 * x) - 0.5;

    const double radicand = cd * (ca * cd - cb * ce) * (ca - cb * cc);
    if (radicand < 0.0)
        throw NegativeDiscriminant("minimize_over_alpha: negative radicand " +
                                   std::to_string(radicand));
    const double root = std::sqrt(radicand);

    AlphaOptimum opt;
    opt.lower_root_alpha_sq = -(ca * cd - root) / (cb * cd);
    if (cb < 0.0) {
        const double alpha_sq = -(ca * cd + root) / (cb * cd);
        opt.alpha_mag = std::sqrt(alpha_sq);
        opt.branch_valid = true;
        opt.g2_min =
            coherence::g2(GaussianParams::amplitude_squeezed(nbar, r, opt.alpha_mag), x).g2;
    } else {
        opt.alpha_mag = 0.0;
        opt.branch_valid = false;
        opt.g2_min = std::numeric_limits<double>::quiet_NaN();
    }
    return opt;
}

AlphaOptimum alpha_optimum_tau0(double nbar, double r) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("nbar must be >= 0");
    if (!(r > 0.5 * std::log(2.0 * nbar + 1.0)))
        throw ExistenceViolation(
            "alpha_optimum_tau0: requires r > ln(2 nbar + 1)/2, no minimum exists");
    if (!(r > kSqueezeEps))
        throw DegenerateSqueeze("alpha_optimum_tau0: squeeze magnitude at or below threshold");
    const double e2r = std::exp(2.0 * r);
    const double twon1 = 2.0 * nbar + 1.0;
    const double num = twon1 * std::expm1(4.0 * r) * (twon1 * e2r - 1.0);
    const double den = e2r - twon1;
    AlphaOptimum opt;
    opt.alpha_mag = 0.5 * std::sqrt(num / den);
    opt.branch_valid = true;
    opt.g2_min =
        coherence::g2(GaussianParams::amplitude_squeezed(nbar, r, opt.alpha_mag), 0.0).g2;
    return opt;
}

double matched_squeeze(double alpha_mag) {
    return 0.25 * std::log1p(4.0 * alpha_mag * alpha_mag);
}

double g2_min_vacuum(double alpha_mag) {
    if (!(alpha_mag > 0.0)) throw std::invalid_argument("alpha_mag must be > 0");
    const double r = matched_squeeze(alpha_mag);
    const double a2 = alpha_mag * alpha_mag;
    const double s2r = std::sinh(2.0 * r);
    const double c2rm1 = 2.0 * std::pow(std::sinh(r), 2);
    return 2.0 + (s2r * (s2r - 4.0 * a2) - 4.0 * a2 * a2) / std::pow(c2rm1 + 2.0 * a2, 2);
}

}  // namespace g2lab::analysis
