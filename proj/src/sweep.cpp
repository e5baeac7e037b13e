#include "g2lab/sweep.hpp"

#include <stdexcept>

namespace g2lab::sweep {

void SweepSpec::validate() const {
    if (!(start >= 0.0)) throw std::invalid_argument("sweep start must be >= 0");
    if (!(stop > start)) throw std::invalid_argument("sweep stop must be > start");
    if (points < 2) throw std::invalid_argument("sweep needs at least 2 points");
}

double SweepSpec::at(int i) const { return start + (stop - start) * i / (points - 1); }

namespace {

using coherence::CoherencePoint;

template <typename PointFn>
std::vector<CoherencePoint> run_parallel(const SweepSpec& spec, const PointFn& eval) {
    spec.validate();
    std::vector<CoherencePoint> out(static_cast<size_t>(spec.points));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < spec.points; ++i) out[static_cast<size_t>(i)] = eval(spec.at(i));
    return out;
}

template <typename PointFn>
std::vector<CoherencePoint> run_serial(const SweepSpec& spec, const PointFn& eval) {
    spec.validate();
    std::vector<CoherencePoint> out(static_cast<size_t>(spec.points));
    for (int i = 0; i < spec.points; ++i) out[static_cast<size_t>(i)] = eval(spec.at(i));
    return out;
}

auto g2_eval(const GaussianParams& g, const SweepSpec& spec, AmplitudeConvention conv) {
    g.validate();
    if (!(g.r > kSqueezeEps))
        throw DegenerateSqueeze("grid_g2: use the displaced-thermal grid for r = 0");
    const bool scale_axis = spec.axis == TimeAxis::tau_over_t;
    const double r = g.r;
    return [g, conv, scale_axis, r](double v) {
        return coherence::g2(g, scale_axis ? v * r : v, conv);
    };
}

auto displaced_eval(double nbar, double alpha_mag, const SweepSpec& spec) {
    if (spec.axis != TimeAxis::tau_over_t)
        throw std::invalid_argument("the r = 0 grid is parameterized by tau/t only");
    return [nbar, alpha_mag](double tt) {
        return coherence::g2_displaced_thermal(nbar, alpha_mag, tt);
    };
}

}  // namespace

std::vector<CoherencePoint> grid_g2(const GaussianParams& g, const SweepSpec& spec,
                                    AmplitudeConvention conv) {
    return run_parallel(spec, g2_eval(g, spec, conv));
}

std::vector<CoherencePoint> grid_g2_serial(const GaussianParams& g, const SweepSpec& spec,
                                           AmplitudeConvention conv) {
    return run_serial(spec, g2_eval(g, spec, conv));
}

std::vector<CoherencePoint> grid_g2_displaced_thermal(double nbar, double alpha_mag,
                                                      const SweepSpec& spec) {
    return run_parallel(spec, displaced_eval(nbar, alpha_mag, spec));
}

std::vector<CoherencePoint> grid_g2_displaced_thermal_serial(double nbar, double alpha_mag,
                                                             const SweepSpec& spec) {
    return run_serial(spec, displaced_eval(nbar, alpha_mag, spec));
}

}  // namespace g2lab::sweep
