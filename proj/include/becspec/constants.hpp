#pragma once

#include <numbers>

namespace becspec {

/// CODATA 2018 values, SI units throughout.
namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double planck = 2.0 * pi * hbar;          // J s
inline constexpr double k_boltzmann = 1.380649e-23;        // J/K
inline constexpr double bohr_radius = 5.29177210903e-11;   // m
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double mass_rb87 = 86.909 * atomic_mass_unit; // kg
inline constexpr double zeta3 = 1.2020569031595943;
}  // namespace constants

struct PhysicalConstants {
    double hbar = constants::hbar;
    double k_boltzmann = constants::k_boltzmann;
    double bohr_radius = constants::bohr_radius;
    double mass_rb87 = constants::mass_rb87;
};

}  // namespace becspec
