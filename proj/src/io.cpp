#include "g2lab/io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace g2lab::io {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15e", v);
    return buf;
}

std::string point_csv_row(const coherence::CoherencePoint& p) {
    return format_double(p.omega_tau) + "," + format_double(p.tau_over_t) + "," +
           format_double(p.g2) + "," + format_double(p.mean_n);
}

void write_points_csv(std::ostream& os, const std::vector<coherence::CoherencePoint>& pts) {
    os << points_csv_header() << "\n";
    for (const auto& p : pts) os << point_csv_row(p) << "\n";
}

namespace {

json point_to_json(const coherence::CoherencePoint& p) {
    return json{{"omega_tau", p.omega_tau},
                {"tau_over_t", p.tau_over_t},
                {"g2", p.g2},
                {"mean_n", p.mean_n}};
}

json regime_to_json(const analysis::RegimeReport& rep) {
    json intervals = json::array();
    for (const auto& iv : rep.violation_intervals)
        intervals.push_back(json{{"lo", iv.lo},
                                 {"hi", iv.hi},
                                 {"inequality", inequality_name(iv.which)},
                                 {"unbounded", iv.unbounded}});
    json j{{"g2_zero", rep.g2_zero},
           {"sub_poissonian", rep.sub_poissonian},
           {"crossings_g2zero", rep.crossings_g2zero},
           {"crossings_mirror", rep.crossings_mirror},
           {"asymptote", rep.asymptote},
           {"violation_intervals", intervals}};
    if (rep.minimum)
        j["minimum"] = json{{"omega_tau", rep.minimum->first}, {"g2", rep.minimum->second}};
    else
        j["minimum"] = nullptr;
    return j;
}

}  // namespace

std::string point_json(const coherence::CoherencePoint& p) { return point_to_json(p).dump(2); }

std::string points_json(const std::vector<coherence::CoherencePoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(p));
    return arr.dump(2);
}

const char* inequality_name(analysis::ClassicalInequality which) {
    switch (which) {
        case analysis::ClassicalInequality::initial_dominance:
            return "g2(0) >= g2(tau)";
        case analysis::ClassicalInequality::mirror:
            return "|g2(0) - 1| > |g2(tau) - 1|";
    }
    return "?";
}

std::string regime_json(const analysis::RegimeReport& rep) { return regime_to_json(rep).dump(2); }

void write_regime_csv(std::ostream& os, const analysis::RegimeReport& rep) {
    os << "record,value1,value2,value3\n";
    os << "g2_zero," << format_double(rep.g2_zero) << ",,\n";
    os << "sub_poissonian," << (rep.sub_poissonian ? 1 : 0) << ",,\n";
    os << "asymptote," << format_double(rep.asymptote) << ",,\n";
    for (double c : rep.crossings_g2zero) os << "crossing_g2zero," << format_double(c) << ",,\n";
    for (double c : rep.crossings_mirror) os << "crossing_mirror," << format_double(c) << ",,\n";
    if (rep.minimum)
        os << "minimum," << format_double(rep.minimum->first) << ","
           << format_double(rep.minimum->second) << ",\n";
    for (const auto& iv : rep.violation_intervals)
        os << "violation_" << (iv.which == analysis::ClassicalInequality::mirror ? "mirror" : "initial")
           << "," << format_double(iv.lo) << "," << format_double(iv.hi) << ","
           << (iv.unbounded ? "unbounded" : "bounded") << "\n";
}

std::string alpha_optimum_json(const analysis::AlphaOptimum& opt) {
    json j{{"branch_valid", opt.branch_valid}};
    if (opt.branch_valid) {
        j["alpha_mag"] = opt.alpha_mag;
        j["g2_min"] = opt.g2_min;
    } else {
        j["alpha_mag"] = nullptr;
        j["g2_min"] = nullptr;
    }
    if (opt.lower_root_alpha_sq) j["lower_root_alpha_sq"] = *opt.lower_root_alpha_sq;
    return j.dump(2);
}

void write_alpha_optimum_csv(std::ostream& os, const analysis::AlphaOptimum& opt) {
    os << "branch_valid,alpha_mag,g2_min\n";
    os << (opt.branch_valid ? 1 : 0) << ",";
    if (opt.branch_valid)
        os << format_double(opt.alpha_mag) << "," << format_double(opt.g2_min);
    else
        os << ",";
    os << "\n";
}

}  // namespace g2lab::io
