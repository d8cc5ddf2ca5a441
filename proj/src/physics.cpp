#include "becspec/physics.hpp"

#include <cmath>
#include <vector>

#include "becspec/errors.hpp"

namespace becspec {

using namespace constants;

double TrapSpec::omega(int axis) const {
    const double f = axis == 0 ? fx_hz : (axis == 1 ? fy_hz : fz_hz);
    return 2.0 * pi * f;
}

double TrapSpec::omega_max() const {
    return 2.0 * pi * std::max({fx_hz, fy_hz, fz_hz});
}

double TrapSpec::omega_bar() const {
    return 2.0 * pi * std::cbrt(fx_hz * fy_hz * fz_hz);
}

double TrapSpec::omega_arith() const {
    return 2.0 * pi * (fx_hz + fy_hz + fz_hz) / 3.0;
}

double TrapSpec::oscillator_length(int axis) const {
    return std::sqrt(hbar / (mass_rb87 * omega(axis)));
}

double TrapSpec::oscillator_length_bar() const {
    return std::sqrt(hbar / (mass_rb87 * omega_bar()));
}

void TrapSpec::validate() const {
    if (!(fx_hz > 0.0) || !(fy_hz > 0.0) || !(fz_hz > 0.0))
        throw ConfigError("trap frequencies must be positive");
    if (delta_x < 0.0) throw ConfigError("trap.delta_x must be >= 0");
    if (gamma < 0.0) throw ConfigError("trap.gamma must be >= 0");
}

static double contact_coupling(double a) {
    return 4.0 * pi * hbar * hbar * a / mass_rb87;
}

double InteractionSpec::g11() const { return contact_coupling(a11()); }
double InteractionSpec::g12() const { return contact_coupling(a12()); }
double InteractionSpec::g22() const { return contact_coupling(a22()); }

CouplingSet couplings_3d(const InteractionSpec& inter) {
    return {inter.g11(), inter.g12(), inter.g22()};
}

CouplingSet couplings_effective_1d(const InteractionSpec& inter, const TrapSpec& trap) {
    const double omega_perp = 2.0 * pi * std::sqrt(trap.fy_hz * trap.fz_hz);
    const double a_perp2 = hbar / (mass_rb87 * omega_perp);
    const double scale = 1.0 / (2.0 * pi * a_perp2);
    return {inter.g11() * scale, inter.g12() * scale, inter.g22() * scale};
}

}  // namespace becspec
