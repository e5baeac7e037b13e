#include "g2lab/figures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "g2lab/analysis.hpp"
#include "g2lab/coherence.hpp"
#include "g2lab/io.hpp"

namespace g2lab::figures {

namespace {

using analysis::RegimeReport;
using sweep::SweepSpec;
using sweep::TimeAxis;

Checkpoint make_checkpoint(const std::string& name, double expected, double tol,
                           double measured) {
    Checkpoint c{name, expected, tol, measured, false};
    c.pass = std::isfinite(measured) && std::abs(measured - expected) <= tol;
    return c;
}

double nth_or_nan(const std::vector<double>& v, size_t i) {
    return i < v.size() ? v[i] : std::numeric_limits<double>::quiet_NaN();
}

std::vector<double> curve_of(const std::vector<coherence::CoherencePoint>& pts) {
    std::vector<double> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.g2);
    return out;
}

FigureResult fig1(int points) {
    const auto g = GaussianParams::amplitude_squeezed(0.1, 0.3, 0.8);
    FigureResult fig{"fig1", TimeAxis::omega_tau, {}, {}, {}};
    const SweepSpec spec{TimeAxis::omega_tau, 0.0, 3.0, points};
    const auto pts = sweep::grid_g2(g, spec);
    for (int i = 0; i < points; ++i) fig.axis_values.push_back(spec.at(i));
    fig.curves.emplace_back("g2", curve_of(pts));

    const RegimeReport rep = analysis::classify(g, 3.0);
    fig.checkpoints.push_back(make_checkpoint("g2_zero", 0.961, 1e-3, rep.g2_zero));
    fig.checkpoints.push_back(make_checkpoint(
        "min_omega_tau", 0.0300, 5e-4,
        rep.minimum ? rep.minimum->first : std::numeric_limits<double>::quiet_NaN()));
    fig.checkpoints.push_back(
        make_checkpoint("crossing_g2zero", 0.0674, 5e-4, nth_or_nan(rep.crossings_g2zero, 0)));
    fig.checkpoints.push_back(
        make_checkpoint("crossing_mirror", 0.593, 5e-3, nth_or_nan(rep.crossings_mirror, 0)));
    fig.checkpoints.push_back(make_checkpoint("asymptote", 1.238, 1e-3, rep.asymptote));
    return fig;
}

FigureResult fig2(int points) {
    const auto g = GaussianParams::amplitude_squeezed(0.0, 0.3, 0.4);
    FigureResult fig{"fig2", TimeAxis::omega_tau, {}, {}, {}};
    const SweepSpec spec{TimeAxis::omega_tau, 0.0, 5.0, points};
    const auto pts = sweep::grid_g2(g, spec);
    for (int i = 0; i < points; ++i) fig.axis_values.push_back(spec.at(i));
    fig.curves.emplace_back("g2", curve_of(pts));

    const RegimeReport rep = analysis::classify(g, 5.0);
    fig.checkpoints.push_back(make_checkpoint("g2_zero", 1.590, 2e-3, rep.g2_zero));
    fig.checkpoints.push_back(make_checkpoint(
        "min_omega_tau", 0.264, 2e-3,
        rep.minimum ? rep.minimum->first : std::numeric_limits<double>::quiet_NaN()));
    fig.checkpoints.push_back(make_checkpoint(
        "min_g2", 1.211, 2e-3,
        rep.minimum ? rep.minimum->second : std::numeric_limits<double>::quiet_NaN()));
    fig.checkpoints.push_back(
        make_checkpoint("crossing_g2zero", 3.113, 1e-2, nth_or_nan(rep.crossings_g2zero, 0)));
    fig.checkpoints.push_back(make_checkpoint("asymptote", 1.624, 2e-3, rep.asymptote));
    return fig;
}

FigureResult fig34(const std::string& id, int points, double nbar, double alpha_mag,
                   double red_g2_zero, double blue_g2_zero, double blue_asym) {
    const double r = 0.3;
    const auto g = GaussianParams::amplitude_squeezed(nbar, r, alpha_mag);
    FigureResult fig{id, TimeAxis::tau_over_t, {}, {}, {}};
    const SweepSpec spec{TimeAxis::tau_over_t, 0.0, 10.0, points};
    const auto red = sweep::grid_g2_displaced_thermal(nbar, alpha_mag, spec);
    const auto blue = sweep::grid_g2(g, spec);
    for (int i = 0; i < points; ++i) fig.axis_values.push_back(spec.at(i));
    fig.curves.emplace_back("g2_red", curve_of(red));
    fig.curves.emplace_back("g2_blue", curve_of(blue));

    fig.checkpoints.push_back(make_checkpoint("red_g2_zero", red_g2_zero, 1e-3, red[0].g2));
    fig.checkpoints.push_back(make_checkpoint(
        "red_asymptote", 1.0, 1e-3, analysis::classify_displaced_thermal(nbar, alpha_mag, 10.0).asymptote));
    fig.checkpoints.push_back(make_checkpoint("blue_g2_zero", blue_g2_zero, 1e-3, blue[0].g2));
    fig.checkpoints.push_back(
        make_checkpoint("blue_asymptote", blue_asym, 1e-3, coherence::g2_asymptote(g)));
    if (id == "fig4") {
        // Caption checkpoints live on the tau/t axis for this figure.
        const RegimeReport rep = analysis::classify(g, 3.0);
        fig.checkpoints.push_back(make_checkpoint(
            "blue_min_tau_over_t", 0.1002, 1e-3,
            rep.minimum ? rep.minimum->first / r : std::numeric_limits<double>::quiet_NaN()));
        fig.checkpoints.push_back(make_checkpoint(
            "blue_tau0", 0.2249, 1e-3, nth_or_nan(rep.crossings_g2zero, 0) / r));
        fig.checkpoints.push_back(make_checkpoint(
            "blue_tau1", 1.978, 1e-2, nth_or_nan(rep.crossings_mirror, 0) / r));
    }
    return fig;
}

FigureResult fig5(int points) {
    const double nbar = 1.0, r = 0.2;
    const auto g = GaussianParams::amplitude_squeezed(nbar, r, 0.0);
    FigureResult fig{"fig5", TimeAxis::omega_tau, {}, {}, {}};
    const SweepSpec spec{TimeAxis::omega_tau, 0.0, 3.0, points};
    const auto pts = sweep::grid_g2(g, spec);
    for (int i = 0; i < points; ++i) fig.axis_values.push_back(spec.at(i));
    fig.curves.emplace_back("g2", curve_of(pts));

    const RegimeReport rep = analysis::classify(g, 3.0);
    fig.checkpoints.push_back(make_checkpoint("g2_zero", 2.301, 2e-3, rep.g2_zero));
    fig.checkpoints.push_back(
        make_checkpoint("crossing_g2zero", 0.794, 5e-3, nth_or_nan(rep.crossings_g2zero, 0)));
    fig.checkpoints.push_back(make_checkpoint("asymptote", 2.203, 2e-3, rep.asymptote));
    const double viol_hi =
        rep.violation_intervals.empty() ? std::numeric_limits<double>::quiet_NaN()
                                        : rep.violation_intervals.front().hi;
    fig.checkpoints.push_back(make_checkpoint("violation_interval_hi", 0.794, 5e-3, viol_hi));
    return fig;
}

}  // namespace

bool FigureResult::all_pass() const {
    for (const auto& c : checkpoints)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> known_figures() { return {"fig1", "fig2", "fig3", "fig4", "fig5"}; }

FigureResult compute_figure(const std::string& id, int points) {
    if (points < 2) throw std::invalid_argument("figure needs at least 2 points");
    if (id == "fig1") return fig1(points);
    if (id == "fig2") return fig2(points);
    if (id == "fig3") return fig34("fig3", points, 1.0, 1.0, 1.750, 1.615, 1.586);
    if (id == "fig4") return fig34("fig4", points, 0.1, 0.8, 1.252, 0.961, 1.238);
    if (id == "fig5") return fig5(points);
    throw std::invalid_argument("unknown figure id: " + id);
}

void write_figure_csv(std::ostream& os, const FigureResult& fig) {
    os << (fig.axis == TimeAxis::omega_tau ? "omega_tau" : "tau_over_t");
    for (const auto& [name, curve] : fig.curves) os << "," << name;
    os << "\n";
    for (size_t i = 0; i < fig.axis_values.size(); ++i) {
        os << io::format_double(fig.axis_values[i]);
        for (const auto& [name, curve] : fig.curves) os << "," << io::format_double(curve[i]);
        os << "\n";
    }
}

std::string checkpoints_json(const FigureResult& fig) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : fig.checkpoints)
        arr.push_back(nlohmann::json{{"name", c.name},
                                     {"expected", c.expected},
                                     {"tolerance", c.tolerance},
                                     {"measured", c.measured},
                                     {"pass", c.pass}});
    return nlohmann::json{{"figure", fig.id}, {"checkpoints", arr}}.dump(2);
}

}  // namespace g2lab::figures
