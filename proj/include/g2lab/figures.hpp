#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/sweep.hpp"
#include "g2lab/types.hpp"

namespace g2lab::figures {

/// A reference value the emitted curve must reproduce.
struct Checkpoint {
    std::string name;
    double expected = 0.0;
    double tolerance = 0.0;
    double measured = 0.0;
    bool pass = false;
};

struct FigureResult {
    std::string id;
    sweep::TimeAxis axis = sweep::TimeAxis::omega_tau;
    std::vector<double> axis_values;
    /// One or two curves; curves[i] matches axis_values.
    std::vector<std::pair<std::string, std::vector<double>>> curves;
    std::vector<Checkpoint> checkpoints;

    bool all_pass() const;
};

/// Known figure identifiers, in order: fig1..fig5.
std::vector<std::string> known_figures();

/// Compute one reference figure (curve data at `points` samples plus its
/// checkpoint validations). Throws std::invalid_argument on unknown id.
FigureResult compute_figure(const std::string& id, int points = 1000);

void write_figure_csv(std::ostream& os, const FigureResult& fig);
std::string checkpoints_json(const FigureResult& fig);

}  // namespace g2lab::figures
