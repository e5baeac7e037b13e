// g2lab: second-order coherence of displaced-squeezed thermal states
// generated by a degenerate parametric amplifier.
//
// Exit codes: 0 success; 1 failed numeric gate (oracle deviation or figure
// checkpoint); 2 parameter/usage error; 3 truncation limit reached.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "g2lab/analysis.hpp"
#include "g2lab/coherence.hpp"
#include "g2lab/figures.hpp"
#include "g2lab/fock.hpp"
#include "g2lab/gaussian_core.hpp"
#include "g2lab/io.hpp"
#include "g2lab/sweep.hpp"

namespace {

using namespace g2lab;

struct StateFlags {
    double nbar = 0.0;
    double r = 0.0;
    double alpha = 0.0;
    double prep_time = 1.0;
    std::optional<double> psi;
    std::optional<double> theta;
    std::optional<double> phi;

    void add_to(CLI::App& cmd, bool need_r = true) {
        cmd.add_option("--nbar", nbar, "mean thermal photon number (>= 0)")->required();
        auto* ropt = cmd.add_option("--r", r, "squeeze magnitude (>= 0)");
        if (need_r) ropt->required();
        cmd.add_option("--alpha", alpha, "displacement magnitude |alpha| (>= 0)");
        cmd.add_option("--prep-time", prep_time, "state preparation time t (> 0)");
        auto* p = cmd.add_option("--theta-minus-2phi", psi,
                                 "relative phase theta - 2*phi (default 0)");
        auto* th = cmd.add_option("--theta", theta, "squeeze phase");
        auto* ph = cmd.add_option("--phi", phi, "displacement phase");
        th->needs(ph);
        ph->needs(th);
        p->excludes(th);
        p->excludes(ph);
    }

    GaussianParams params() const {
        if (theta && phi)
            return GaussianParams::create(nbar, r, *theta, alpha, *phi, prep_time);
        return GaussianParams::with_relative_phase(nbar, r, alpha, psi.value_or(0.0), prep_time);
    }
};

struct OutputFlags {
    std::string format = "csv";
    std::string path;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd.add_option("--output,-o", path, "write to file instead of stdout");
    }

    bool json() const { return format == "json"; }

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open output file: " + path);
        out << text;
    }
};

std::string points_text(const std::vector<coherence::CoherencePoint>& pts, bool json) {
    if (json) return io::points_json(pts) + "\n";
    std::ostringstream os;
    io::write_points_csv(os, pts);
    return os.str();
}

int oracle_dim_max_default() {
    if (const char* env = std::getenv("G2LAB_ORACLE_DIM_MAX")) {
        try {
            const int v = std::stoi(env);
            if (v >= kOracleDimStart) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid G2LAB_ORACLE_DIM_MAX='" << env << "'\n";
    }
    return kOracleDimMaxDefault;
}

AmplitudeConvention parse_convention(const std::string& s) {
    return s == "dynamic" ? AmplitudeConvention::dynamic : AmplitudeConvention::reference;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "g2lab: temporal second-order coherence g2(tau) of displaced-squeezed "
        "thermal states prepared by a degenerate parametric amplifier"};
    app.require_subcommand(1);

    // ---- eval -------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate g2 at a single lag");
    StateFlags eval_state;
    eval_state.add_to(*eval);
    OutputFlags eval_out;
    eval_out.add_to(*eval);
    std::optional<double> eval_x, eval_tt;
    std::string eval_conv = "reference";
    eval->add_option("--omega-tau", eval_x, "dimensionless lag Omega*tau");
    eval->add_option("--tau-over-t", eval_tt, "lag as tau/t (required when r = 0)");
    eval->add_option("--convention", eval_conv, "amplitude convention")
        ->check(CLI::IsMember({"reference", "dynamic"}));

    // ---- sweep ------------------------------------------------------------
    auto* swp = app.add_subcommand("sweep", "evaluate g2 over a uniform lag grid");
    StateFlags sweep_state;
    sweep_state.add_to(*swp);
    OutputFlags sweep_out;
    sweep_out.add_to(*swp);
    double sweep_start = 0.0, sweep_stop = 3.0;
    int sweep_points = 256;
    bool sweep_serial = false;
    std::string sweep_axis = "omega-tau", sweep_conv = "reference";
    swp->add_option("--start", sweep_start, "first lag value");
    swp->add_option("--stop", sweep_stop, "last lag value");
    swp->add_option("--points", sweep_points, "number of grid points (>= 2)");
    swp->add_option("--axis", sweep_axis, "lag axis")
        ->check(CLI::IsMember({"omega-tau", "tau-over-t"}));
    swp->add_option("--convention", sweep_conv, "amplitude convention")
        ->check(CLI::IsMember({"reference", "dynamic"}));
    swp->add_flag("--serial", sweep_serial, "use the serial reference kernel");

    // ---- figure -----------------------------------------------------------
    auto* figc = app.add_subcommand("figure", "emit a reference figure curve as CSV plus "
                                              "checkpoint JSON; nonzero exit if a "
                                              "checkpoint misses its tolerance");
    std::string figure_id;
    int figure_points = 1000;
    OutputFlags figure_out;
    figure_out.add_to(*figc);
    std::string checkpoints_path;
    figc->add_option("id", figure_id, "figure identifier (fig1..fig5)")->required();
    figc->add_option("--points", figure_points, "samples per curve");
    figc->add_option("--checkpoints", checkpoints_path,
                     "write checkpoint JSON here (default: <output>.checkpoints.json, or "
                     "stderr when printing to stdout)");

    // ---- classify ---------------------------------------------------------
    auto* cls = app.add_subcommand("classify",
                                   "locate minima, crossings and classical-inequality "
                                   "violations over a lag range");
    StateFlags cls_state;
    cls_state.add_to(*cls);
    OutputFlags cls_out;
    cls_out.add_to(*cls);
    double cls_max = 3.0;
    int cls_grid = 4096;
    cls->add_option("--max-lag", cls_max,
                    "scan range (Omega*tau for r > 0, tau/t for r = 0)");
    cls->add_option("--grid", cls_grid, "scan grid points (>= 64)");

    // ---- optimize-alpha ---------------------------------------------------
    auto* opt = app.add_subcommand("optimize-alpha",
                                   "displacement magnitude minimizing g2 at fixed lag "
                                   "(theta = 2*phi)");
    double opt_nbar = 0.0, opt_r = 0.0, opt_x = 0.0;
    OutputFlags opt_out;
    opt_out.add_to(*opt);
    opt->add_option("--nbar", opt_nbar, "mean thermal photon number")->required();
    opt->add_option("--r", opt_r, "squeeze magnitude")->required();
    opt->add_option("--omega-tau", opt_x, "lag (default 0)");

    // ---- oracle-check -----------------------------------------------------
    auto* orc = app.add_subcommand("oracle-check",
                                   "compare the closed forms against the truncated-basis "
                                   "simulation; exit 1 when the dynamic-convention "
                                   "deviation exceeds 1e-6");
    StateFlags orc_state;
    orc_state.add_to(*orc);
    double orc_x = 0.0;
    int orc_dim_max = oracle_dim_max_default();
    orc->add_option("--omega-tau", orc_x, "lag")->required();
    orc->add_option("--dim-max", orc_dim_max,
                    "basis-size cap (default: G2LAB_ORACLE_DIM_MAX or 1024)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) {
            const bool degenerate = eval_state.r <= kSqueezeEps;
            if (degenerate && !eval_tt)
                throw std::invalid_argument("r = 0 evolves in tau/t; pass --tau-over-t");
            if (eval_x && eval_tt)
                throw std::invalid_argument("pass exactly one of --omega-tau / --tau-over-t");
            coherence::CoherencePoint pt;
            if (degenerate) {
                pt = coherence::g2_displaced_thermal(eval_state.nbar, eval_state.alpha,
                                                     *eval_tt);
            } else {
                const GaussianParams g = eval_state.params();
                double x = 0.0;
                if (eval_x)
                    x = *eval_x;
                else if (eval_tt)
                    x = *eval_tt * g.r;
                else
                    throw std::invalid_argument("pass --omega-tau or --tau-over-t");
                pt = coherence::g2(g, x, parse_convention(eval_conv));
            }
            eval_out.emit(eval_out.json() ? io::point_json(pt) + "\n"
                                          : std::string(io::points_csv_header()) + "\n" +
                                                io::point_csv_row(pt) + "\n");
            return 0;
        }

        if (*swp) {
            sweep::SweepSpec spec{sweep_axis == "tau-over-t" ? sweep::TimeAxis::tau_over_t
                                                             : sweep::TimeAxis::omega_tau,
                                  sweep_start, sweep_stop, sweep_points};
            std::vector<coherence::CoherencePoint> pts;
            if (sweep_state.r <= kSqueezeEps) {
                pts = sweep_serial
                          ? sweep::grid_g2_displaced_thermal_serial(sweep_state.nbar,
                                                                    sweep_state.alpha, spec)
                          : sweep::grid_g2_displaced_thermal(sweep_state.nbar,
                                                             sweep_state.alpha, spec);
            } else {
                const GaussianParams g = sweep_state.params();
                const AmplitudeConvention conv = parse_convention(sweep_conv);
                pts = sweep_serial ? sweep::grid_g2_serial(g, spec, conv)
                                   : sweep::grid_g2(g, spec, conv);
            }
            sweep_out.emit(points_text(pts, sweep_out.json()));
            return 0;
        }

        if (*figc) {
            const figures::FigureResult fig = figures::compute_figure(figure_id, figure_points);
            std::ostringstream csv;
            figures::write_figure_csv(csv, fig);
            figure_out.emit(csv.str());
            const std::string cp = figures::checkpoints_json(fig) + "\n";
            std::string cp_path = checkpoints_path;
            if (cp_path.empty() && !figure_out.path.empty())
                cp_path = figure_out.path + ".checkpoints.json";
            if (cp_path.empty()) {
                std::cerr << cp;
            } else {
                std::ofstream out(cp_path);
                if (!out) throw std::invalid_argument("cannot open " + cp_path);
                out << cp;
            }
            if (!fig.all_pass()) {
                std::cerr << "figure " << figure_id << ": checkpoint(s) out of tolerance\n";
                return 1;
            }
            return 0;
        }

        if (*cls) {
            analysis::RegimeReport rep;
            if (cls_state.r <= kSqueezeEps)
                rep = analysis::classify_displaced_thermal(cls_state.nbar, cls_state.alpha,
                                                           cls_max, cls_grid);
            else
                rep = analysis::classify(cls_state.params(), cls_max, cls_grid);
            if (cls_out.json()) {
                cls_out.emit(io::regime_json(rep) + "\n");
            } else {
                std::ostringstream os;
                io::write_regime_csv(os, rep);
                cls_out.emit(os.str());
            }
            return 0;
        }

        if (*opt) {
            const analysis::AlphaOptimum res =
                analysis::minimize_over_alpha(opt_nbar, opt_r, opt_x);
            if (opt_out.json()) {
                opt_out.emit(io::alpha_optimum_json(res) + "\n");
            } else {
                std::ostringstream os;
                io::write_alpha_optimum_csv(os, res);
                opt_out.emit(os.str());
            }
            return 0;
        }

        if (*orc) {
            const GaussianParams g = orc_state.params();
            const coherence::CoherencePoint closed_dynamic =
                coherence::g2(g, orc_x, AmplitudeConvention::dynamic);
            const coherence::CoherencePoint closed_reference =
                coherence::g2(g, orc_x, AmplitudeConvention::reference);
            fock::OracleOptions opts;
            opts.dim_max = orc_dim_max;
            const fock::OracleResult oracle = fock::g2_oracle(g, orc_x, opts);
            const double abs_dev = std::abs(closed_dynamic.g2 - oracle.g2);
            const double rel_dev = abs_dev / std::abs(closed_dynamic.g2);
            std::cout << "closed_form_dynamic   = " << io::format_double(closed_dynamic.g2)
                      << "\n"
                      << "closed_form_reference = " << io::format_double(closed_reference.g2)
                      << "\n"
                      << "oracle                = " << io::format_double(oracle.g2) << "\n"
                      << "dim                   = " << oracle.dim << "\n"
                      << "abs_deviation         = " << io::format_double(abs_dev) << "\n"
                      << "rel_deviation         = " << io::format_double(rel_dev) << "\n"
                      << "reference_rel_dev     = "
                      << io::format_double(std::abs(closed_reference.g2 - oracle.g2) /
                                           std::abs(closed_reference.g2))
                      << "\n";
            return rel_dev <= 1e-6 ? 0 : 1;
        }
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
