#pragma once

#include <map>
#include <string>
#include <vector>

#include "becspec/physics.hpp"
#include "becspec/pulse.hpp"

namespace becspec {

enum class Model {
    ground,
    modes,
    spectrum_zero_t,
    spectrum_thermal,
    spectrum_high_t,
    sweep,
};

std::string to_string(Model m);
Model model_from_string(const std::string& s);

/// Fully resolved run configuration. Parsed from flat "namespace.key = value"
/// lines; units are part of the key names and converted to SI here.
struct RunConfig {
    Model model = Model::ground;

    // trap.*
    double trap_fx_hz = 112.0;
    double trap_fy_hz = 517.0;
    double trap_fz_hz = 517.0;
    double trap_delta_x_um = 0.0;
    double trap_gamma_hz_per_um = 0.0;
    double trap_bottom_offset_hz = 0.0;

    // atoms.*
    double atoms_n = 400.0;

    // scattering.*
    double scattering_a11_a0 = 100.4;
    double scattering_a12_a0 = 98.01;
    double scattering_a22_a0 = 95.44;

    // pulse.*
    double pulse_rabi_hz = 3.5;
    double pulse_duration_ms = 140.0;

    // sweep.*
    double sweep_delta_min_hz = -250.0;
    double sweep_delta_max_hz = 150.0;
    int sweep_points = 81;
    int sweep_workers = 0;  // 0 = hardware concurrency

    // grid.*
    int grid_nx = 64;
    int grid_ny = 32;
    int grid_nz = 32;
    double grid_extent_factor = 6.0;

    // solver.*
    double solver_dt_imag_factor = 0.1;
    double solver_tol = 1e-10;
    double solver_dt_real_us = 5.0;
    bool solver_effective_1d = false;

    // modes.*
    int modes_k = 10;

    // thermal.*
    double thermal_temperature_nk = 0.0;

    // io.*
    std::string io_ground_checkpoint;  // optional: reuse an existing solve

    TrapSpec trap() const;
    InteractionSpec interactions() const;
    PulseSpec pulse() const;  // detuning left at zero
    double temperature() const;  // K

    /// Every key with its resolved value, in a stable order.
    std::vector<std::pair<std::string, std::string>> resolved() const;
};

/// Parses "key = value" text. Unknown keys, malformed lines, unit or range
/// violations raise ConfigError naming the key and line.
RunConfig parse_config_text(const std::string& text, const std::string& preset = "");
RunConfig parse_config_file(const std::string& path, const std::string& preset = "");

/// Built-in presets: paper_n400, paper_n800, paper_highT.
const std::map<std::string, std::string>& preset_text(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace becspec
