#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "g2lab/analysis.hpp"
#include "g2lab/coherence.hpp"
#include "g2lab/fock.hpp"
#include "g2lab/sweep.hpp"

namespace g2lab::io {

/// Scientific notation with 16 significant digits; deterministic across runs.
std::string format_double(double v);

void write_points_csv(std::ostream& os, const std::vector<coherence::CoherencePoint>& pts);
std::string points_json(const std::vector<coherence::CoherencePoint>& pts);
std::string point_json(const coherence::CoherencePoint& p);
std::string point_csv_row(const coherence::CoherencePoint& p);
inline const char* points_csv_header() { return "omega_tau,tau_over_t,g2,mean_n"; }

void write_regime_csv(std::ostream& os, const analysis::RegimeReport& rep);
std::string regime_json(const analysis::RegimeReport& rep);

std::string alpha_optimum_json(const analysis::AlphaOptimum& opt);
void write_alpha_optimum_csv(std::ostream& os, const analysis::AlphaOptimum& opt);

const char* inequality_name(analysis::ClassicalInequality which);

}  // namespace g2lab::io
