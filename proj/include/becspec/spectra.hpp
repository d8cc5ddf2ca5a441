#pragma once

#include <optional>
#include <vector>

#include "becspec/eigenmodes.hpp"
#include "becspec/pulse.hpp"

namespace becspec {

/// One golden-rule transition. alpha is the initial species-1 mode index, or
/// empty for transitions out of the condensate; beta the final species-2 mode.
struct SpectrumLine {
    double detuning_hz = 0.0;
    double weight = 0.0;
    std::optional<int> alpha;  // nullopt = BEC
    int beta = 0;
};

enum class Normalization { raw, unit_peak, matched };

struct CurveSample {
    double detuning_hz = 0.0;
    double amplitude = 0.0;
};

struct Spectrum {
    std::vector<SpectrumLine> lines;  // sorted by detuning
    std::vector<CurveSample> curve;
    Normalization normalization = Normalization::raw;
};

/// Uniform detuning sampling for the convolved curve.
struct SampleGrid {
    double min_hz = -250.0;
    double max_hz = 150.0;
    int points = 801;

    double step() const { return points > 1 ? (max_hz - min_hz) / (points - 1) : 0.0; }
};

/// Franck-Condon weights |<initial|mode_b>|^2 against every mode of the set.
/// The initial field must be normalized to 1.
std::vector<double> overlap_weights(const ComplexField& initial,
                                    const EigenSet& final_modes);

/// One line per species-2 mode at (E_2b - mu)/h with weight
/// N |<psi1/sqrt(N)|psi_2b>|^2.
std::vector<SpectrumLine> zero_temperature_lines(const GroundState& ground,
                                                 const EigenSet& modes2);

struct ThermalOccupations {
    double temperature = 0.0;        // K
    double chemical_potential = 0.0; // J
    std::vector<double> occupations; // n_a per species-1 mode
    double total() const;
};

/// Bose-Einstein occupations n_a = 1/(exp((E_1a - mu_th)/kT) - 1).
/// Any E_1a <= mu_th is an error; T = 0 gives all zeros.
ThermalOccupations bose_occupations(const EigenSet& modes1, double mu_th,
                                    double temperature);

/// Line per (a, b) at (E_2b - E_1a)/h weighted by n_a |<psi_1a|psi_2b>|^2.
/// Lines below weight 1e-9 are pruned.
std::vector<SpectrumLine> thermal_lines(const EigenSet& modes1,
                                        const EigenSet& modes2,
                                        const ThermalOccupations& occ);

/// Square-pulse two-level lineshape
/// K(f) = Omega^2/(Omega^2 + w^2) sin^2(sqrt(Omega^2 + w^2) t/2), w = 2 pi f.
/// Non-negative with K(0) = sin^2(Omega t / 2).
double lineshape_kernel(double f_hz, const PulseSpec& pulse);

/// curve(d) = sum over lines of weight * K(d - line detuning). An empty line
/// list gives a flat zero curve. The sample grid must cover every line within
/// five kernel widths.
Spectrum convolve_lineshape(std::vector<SpectrumLine> lines, const PulseSpec& pulse,
                            const SampleGrid& samples);

/// unit_peak scales the maximum to 1; matched scales the peak to the
/// reference spectrum's peak. A zero spectrum cannot be normalized.
Spectrum normalize_spectrum(Spectrum spec, Normalization mode,
                            const Spectrum* reference = nullptr);

/// Thermal spectrum of the 1D anharmonic model: solves both wells, fills the
/// x-modes with Bose-Einstein occupations summed over the transverse harmonic
/// ladders (fugacity from the total atom number by bisection), then builds
/// thermal lines and convolves.
Spectrum high_temperature_spectrum(const TrapSpec& trap, double n_atoms,
                                   double temperature, int k,
                                   const PulseSpec& pulse, const SampleGrid& samples);

/// The occupation solve behind high_temperature_spectrum, exposed for tests:
/// effective occupation per 1D x-mode after the transverse sum, with the
/// fugacity bisected so the occupations sum to n_atoms.
ThermalOccupations transverse_summed_occupations(const EigenSet& modes1_1d,
                                                 const TrapSpec& trap,
                                                 double n_atoms,
                                                 double temperature);

}  // namespace becspec
