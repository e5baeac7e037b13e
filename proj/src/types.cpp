#include "g2lab/types.hpp"

#include <cmath>
#include <numbers>

namespace g2lab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

double reduce_phase(double angle) {
    if (!std::isfinite(angle)) throw std::invalid_argument("phase must be finite");
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

double GaussianParams::psi() const { return reduce_phase(theta - 2.0 * phi); }

ComplexAmplitude GaussianParams::alpha() const { return std::polar(alpha_mag, phi); }

ComplexAmplitude GaussianParams::xi() const { return std::polar(r, theta); }

void GaussianParams::validate() const {
    require(std::isfinite(nbar) && nbar >= 0.0, "nbar must be finite and >= 0");
    require(std::isfinite(r) && r >= 0.0, "r must be finite and >= 0");
    require(std::isfinite(alpha_mag) && alpha_mag >= 0.0, "alpha_mag must be finite and >= 0");
    require(std::isfinite(theta), "theta must be finite");
    require(std::isfinite(phi), "phi must be finite");
    require(std::isfinite(prep_time) && prep_time > 0.0, "prep_time must be finite and > 0");
}

GaussianParams GaussianParams::create(double nbar, double r, double theta, double alpha_mag,
                                      double phi, double prep_time) {
    GaussianParams g{nbar, r, reduce_phase(theta), alpha_mag,
                     alpha_mag > 0.0 ? reduce_phase(phi) : 0.0, prep_time};
    g.validate();
    return g;
}

GaussianParams GaussianParams::with_relative_phase(double nbar, double r, double alpha_mag,
                                                   double psi, double prep_time) {
    return create(nbar, r, psi, alpha_mag, 0.0, prep_time);
}

GaussianParams GaussianParams::amplitude_squeezed(double nbar, double r, double alpha_mag,
                                                  double prep_time) {
    return create(nbar, r, 0.0, alpha_mag, 0.0, prep_time);
}

double DpaParams::prep_time() const {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0 to recover prep_time");
    return 2.0 * std::abs(tc) / omega;
}

}  // namespace g2lab
