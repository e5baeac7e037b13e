#pragma once

#include <vector>

#include "g2lab/coherence.hpp"
#include "g2lab/types.hpp"

namespace g2lab::sweep {

enum class TimeAxis { omega_tau, tau_over_t };

struct SweepSpec {
    TimeAxis axis = TimeAxis::omega_tau;
    double start = 0.0;
    double stop = 1.0;
    int points = 2;

    void validate() const;
    /// Axis value of sample i (uniform grid, endpoints included).
    double at(int i) const;
};

/// Evaluate g2 over the grid. The parallel kernel partitions the grid across
/// threads and writes by index, so its output is bit-identical to the serial
/// reference for identical inputs.
std::vector<coherence::CoherencePoint> grid_g2(
    const GaussianParams& g, const SweepSpec& spec,
    AmplitudeConvention conv = AmplitudeConvention::reference);

std::vector<coherence::CoherencePoint> grid_g2_serial(
    const GaussianParams& g, const SweepSpec& spec,
    AmplitudeConvention conv = AmplitudeConvention::reference);

/// r = 0 path over tau/t (spec.axis must be tau_over_t).
std::vector<coherence::CoherencePoint> grid_g2_displaced_thermal(double nbar, double alpha_mag,
                                                                 const SweepSpec& spec);

std::vector<coherence::CoherencePoint> grid_g2_displaced_thermal_serial(double nbar,
                                                                        double alpha_mag,
                                                                        const SweepSpec& spec);

}  // namespace g2lab::sweep
