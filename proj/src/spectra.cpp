#include "becspec/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "becspec/errors.hpp"

namespace becspec {

using namespace constants;

namespace {
constexpr double line_prune_threshold = 1e-9;

void sort_lines(std::vector<SpectrumLine>& lines) {
    std::sort(lines.begin(), lines.end(),
              [](const SpectrumLine& a, const SpectrumLine& b) {
                  return a.detuning_hz < b.detuning_hz;
              });
}
}  // namespace

std::vector<double> overlap_weights(const ComplexField& initial,
                                    const EigenSet& final_modes) {
    std::vector<double> w;
    w.reserve(final_modes.modes.size());
    for (const auto& mode : final_modes.modes)
        w.push_back(std::norm(inner_product(initial, mode)));
    return w;
}

std::vector<SpectrumLine> zero_temperature_lines(const GroundState& ground,
                                                 const EigenSet& modes2) {
    ComplexField unit = ground.psi1;
    unit.norm_target = 1.0;
    unit.renormalize();
    const auto w = overlap_weights(unit, modes2);

    std::vector<SpectrumLine> lines;
    for (int b = 0; b < modes2.k(); ++b) {
        SpectrumLine line;
        line.detuning_hz = (modes2.energies[b] - ground.mu) / planck;
        line.weight = ground.n_atoms * w[b];
        line.alpha = std::nullopt;
        line.beta = b;
        lines.push_back(line);
    }
    sort_lines(lines);
    return lines;
}

double ThermalOccupations::total() const {
    double s = 0.0;
    for (double n : occupations) s += n;
    return s;
}

ThermalOccupations bose_occupations(const EigenSet& modes1, double mu_th,
                                    double temperature) {
    if (temperature < 0.0) throw ConfigError("temperature must be >= 0");
    ThermalOccupations occ;
    occ.temperature = temperature;
    occ.chemical_potential = mu_th;
    occ.occupations.reserve(modes1.energies.size());
    for (double e : modes1.energies) {
        if (e <= mu_th)
            throw SolverError("bose_occupations: mode energy at or below mu_th");
        if (temperature == 0.0) {
            occ.occupations.push_back(0.0);
        } else {
            occ.occupations.push_back(1.0 / std::expm1((e - mu_th) /
                                                       (k_boltzmann * temperature)));
        }
    }
    return occ;
}

std::vector<SpectrumLine> thermal_lines(const EigenSet& modes1,
                                        const EigenSet& modes2,
                                        const ThermalOccupations& occ) {
    if (occ.occupations.size() != modes1.modes.size())
        throw ConfigError("thermal_lines: occupations do not match modes1");

    std::vector<SpectrumLine> lines;
    for (int a = 0; a < modes1.k(); ++a) {
        if (occ.occupations[a] <= 0.0) continue;
        for (int b = 0; b < modes2.k(); ++b) {
            const double fc = std::norm(inner_product(modes1.modes[a], modes2.modes[b]));
            const double weight = occ.occupations[a] * fc;
            if (weight < line_prune_threshold) continue;
            SpectrumLine line;
            line.detuning_hz = (modes2.energies[b] - modes1.energies[a]) / planck;
            line.weight = weight;
            line.alpha = a;
            line.beta = b;
            lines.push_back(line);
        }
    }
    sort_lines(lines);
    return lines;
}

double lineshape_kernel(double f_hz, const PulseSpec& pulse) {
    const double w = 2.0 * pi * f_hz;
    const double r2 = pulse.rabi * pulse.rabi + w * w;
    if (r2 == 0.0) return 0.0;
    const double s = std::sin(0.5 * std::sqrt(r2) * pulse.duration);
    return pulse.rabi * pulse.rabi / r2 * s * s;
}

Spectrum convolve_lineshape(std::vector<SpectrumLine> lines, const PulseSpec& pulse,
                            const SampleGrid& samples) {
    if (samples.points < 2 || !(samples.max_hz > samples.min_hz))
        throw ConfigError("convolve_lineshape: bad sample grid");
    if (!(pulse.duration > 0.0)) throw ConfigError("pulse duration must be > 0");

    sort_lines(lines);
    Spectrum spec;
    spec.normalization = Normalization::raw;
    spec.curve.resize(samples.points);
    const double step = samples.step();
    for (int i = 0; i < samples.points; ++i) {
        const double f = samples.min_hz + i * step;
        double amp = 0.0;
        for (const auto& line : lines)
            amp += line.weight * lineshape_kernel(f - line.detuning_hz, pulse);
        spec.curve[i] = {f, amp};
    }
    spec.lines = std::move(lines);
    return spec;
}

Spectrum normalize_spectrum(Spectrum spec, Normalization mode,
                            const Spectrum* reference) {
    if (mode == Normalization::raw) {
        spec.normalization = Normalization::raw;
        return spec;
    }
    double peak = 0.0;
    for (const auto& s : spec.curve) peak = std::max(peak, s.amplitude);
    if (!(peak > 0.0))
        throw ConfigError("normalize_spectrum: zero spectrum cannot be scaled");

    double target = 1.0;
    if (mode == Normalization::matched) {
        if (!reference)
            throw ConfigError("normalize_spectrum: matched mode requires a reference");
        double ref_peak = 0.0;
        for (const auto& s : reference->curve)
            ref_peak = std::max(ref_peak, s.amplitude);
        target = ref_peak;
    }
    const double scale = target / peak;
    for (auto& s : spec.curve) s.amplitude *= scale;
    for (auto& line : spec.lines) line.weight *= scale;
    spec.normalization = mode;
    return spec;
}

ThermalOccupations transverse_summed_occupations(const EigenSet& modes1_1d,
                                                 const TrapSpec& trap,
                                                 double n_atoms,
                                                 double temperature) {
    if (!(temperature > 0.0)) throw ConfigError("temperature must be > 0");
    if (!(n_atoms > 0.0)) throw ConfigError("n_atoms must be > 0");
    const double kt = k_boltzmann * temperature;
    const double xy = hbar * trap.omega(1) / kt;
    const double xz = hbar * trap.omega(2) / kt;
    const double e_perp0 = 0.5 * hbar * (trap.omega(1) + trap.omega(2));
    const auto& e1 = modes1_1d.energies;
    const double e_min = e1.front() + e_perp0;

    // n_eff(a) = sum_{ny,nz} n_BE(E_a + E_perp). The transverse sums are
    // geometric per power of the fugacity:
    // n_eff(a) = sum_j zeta_a^j e^{-j(xy+xz)/2} / ((1-e^{-j xy})(1-e^{-j xz})).
    auto occupations_at = [&](double mu_th) {
        std::vector<double> occ(e1.size(), 0.0);
        for (std::size_t a = 0; a < e1.size(); ++a) {
            const double zeta = std::exp((mu_th - e1[a] - e_perp0) / kt);
            double sum = 0.0;
            double zj = 1.0;
            for (int j = 1; j < 100000; ++j) {
                zj *= zeta;
                const double term = zj / (-std::expm1(-j * xy)) /
                                    (-std::expm1(-j * xz));
                sum += term;
                if (term < 1e-14 * (sum + 1e-300)) break;
            }
            occ[a] = sum;
        }
        return occ;
    };

    auto total_at = [&](double mu_th) {
        const auto occ = occupations_at(mu_th);
        double s = 0.0;
        for (double v : occ) s += v;
        return s;
    };

    double lo = e_min - 80.0 * kt;
    double hi = e_min - 1e-12 * std::abs(e_min);
    if (total_at(lo) > n_atoms)
        throw SolverError("fugacity bisection: lower bracket too high");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (total_at(mid) < n_atoms ? lo : hi) = mid;
    }
    const double mu_th = 0.5 * (lo + hi);
    if (total_at(mu_th) < 0.5 * n_atoms)
        throw SolverError("fugacity bisection did not reach the atom number");

    ThermalOccupations occ;
    occ.temperature = temperature;
    occ.chemical_potential = mu_th;
    occ.occupations = occupations_at(mu_th);
    return occ;
}

Spectrum high_temperature_spectrum(const TrapSpec& trap, double n_atoms,
                                   double temperature, int k,
                                   const PulseSpec& pulse,
                                   const SampleGrid& samples) {
    auto [set1, set2] = anharmonic_modes_1d(trap, k);
    const auto occ = transverse_summed_occupations(set1, trap, n_atoms, temperature);
    auto lines = thermal_lines(set1, set2, occ);
    return convolve_lineshape(std::move(lines), pulse, samples);
}

}  // namespace becspec
