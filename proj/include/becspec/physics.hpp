#pragma once

#include <array>

#include "becspec/constants.hpp"

namespace becspec {

/// Trap geometry. Frequencies are ordinary frequencies in Hz; delta_x is the
/// displacement of the state-2 trap along x in metres; gamma is the quartic
/// anharmonicity constant in s^-1 m^-1; bottom_offset is the energy offset of
/// the state-2 trap bottom in Hz.
struct TrapSpec {
    double fx_hz = 112.0;
    double fy_hz = 517.0;
    double fz_hz = 517.0;
    double delta_x = 0.0;
    double gamma = 0.0;
    double bottom_offset_hz = 0.0;

    double omega(int axis) const;            // rad/s
    double omega_x() const { return omega(0); }
    double omega_max() const;
    double omega_bar() const;                // geometric mean, rad/s
    double omega_arith() const;              // arithmetic mean, rad/s
    double oscillator_length(int axis) const;    // sqrt(hbar / m omega)
    double oscillator_length_bar() const;        // with omega_bar
    void validate() const;                       // throws ConfigError
};

/// Scattering lengths in units of the Bohr radius and the derived contact
/// couplings g_ij = 4 pi hbar^2 a_ij / m.
struct InteractionSpec {
    double a11_a0 = 100.4;
    double a12_a0 = 98.01;
    double a22_a0 = 95.44;

    double a11() const { return a11_a0 * constants::bohr_radius; }
    double a12() const { return a12_a0 * constants::bohr_radius; }
    double a22() const { return a22_a0 * constants::bohr_radius; }
    double g11() const;
    double g12() const;
    double g22() const;
};

/// Plain coupling values handed to the solvers. Obtained from an
/// InteractionSpec either directly (3D) or rescaled for the effective-1D mode.
struct CouplingSet {
    double g11 = 0.0;
    double g12 = 0.0;
    double g22 = 0.0;
};

CouplingSet couplings_3d(const InteractionSpec& inter);

/// g / (2 pi a_perp^2) with a_perp the transverse oscillator length of the
/// geometric-mean transverse frequency.
CouplingSet couplings_effective_1d(const InteractionSpec& inter, const TrapSpec& trap);

}  // namespace becspec
