#include "becspec/dynamics.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <thread>

#include "becspec/errors.hpp"

namespace becspec {

using namespace constants;

namespace {

struct KineticTable {
    std::vector<complex> half;  // exp(-i T dt / 2hbar)
    std::vector<complex> full;  // exp(-i T dt / hbar)
};

KineticTable kinetic_table(const FourierTransform& fft, double dt) {
    const auto& k2 = fft.k_squared();
    KineticTable t;
    t.half.resize(k2.size());
    t.full.resize(k2.size());
    for (std::size_t i = 0; i < k2.size(); ++i) {
        const double phase = hbar * k2[i] / (2.0 * mass_rb87) * dt;
        t.half[i] = std::polar(1.0, -0.5 * phase);
        t.full[i] = std::polar(1.0, -phase);
    }
    return t;
}

// Local step over dt: potential and mean-field phases plus the Rabi coupling
// applied as the exact exponential of the pointwise 2x2 Hamiltonian
//   [ u1        C  ]         C = (hbar Omega / 2) e^{+i theta},
//   [ conj(C)   u2 ]
// with densities frozen and theta the drive phase at the substep midpoint.
// Positive detuning is resonant with transitions to higher-energy modes.
void local_step(ComplexField& psi1, ComplexField& psi2, double dt,
                const PulseSpec& pulse, const RealField& v1, const RealField& v2,
                const CouplingSet& g, double t_mid) {
    const double theta = pulse.detuning * t_mid;
    const complex coupling = 0.5 * hbar * pulse.rabi * std::polar(1.0, theta);
    const double cmag = std::abs(coupling);
    const std::size_t n = psi1.values.size();
    for (std::size_t i = 0; i < n; ++i) {
        const complex a = psi1.values[i];
        const complex b = psi2.values[i];
        const double rho1 = std::norm(a);
        const double rho2 = std::norm(b);
        const double u1 = v1.values[i] + g.g11 * rho1 + g.g12 * rho2;
        const double u2 = v2.values[i] + g.g22 * rho2 + g.g12 * rho1;
        const double mean = 0.5 * (u1 + u2);
        const double w = 0.5 * (u1 - u2);
        const double r = std::sqrt(w * w + cmag * cmag);
        const double phi = r * dt / hbar;
        const double c = std::cos(phi);
        const double s = r > 0.0 ? std::sin(phi) / r : dt / hbar;
        const complex global = std::polar(1.0, -mean * dt / hbar);
        const complex m11 = global * complex{c, -s * w};
        const complex m22 = global * complex{c, +s * w};
        const complex m12 = global * (complex{0.0, -s} * coupling);
        const complex m21 = global * (complex{0.0, -s} * std::conj(coupling));
        psi1.values[i] = m11 * a + m12 * b;
        psi2.values[i] = m21 * a + m22 * b;
    }
}

void apply_kinetic(ComplexField& psi, const std::vector<complex>& table,
                   const FourierTransform& fft) {
    fft.forward(psi.values.data());
    for (std::size_t i = 0; i < psi.values.size(); ++i) psi.values[i] *= table[i];
    fft.backward(psi.values.data());
}

void check_finite(const ComplexField& psi, long step) {
    const double n = psi.norm();
    if (!std::isfinite(n))
        throw SolverError("dynamics: non-finite state at step " + std::to_string(step));
}

}  // namespace

void step_coupled(TwoComponentState& state, double dt, const PulseSpec& pulse,
                  const RealField& v1, const RealField& v2, const CouplingSet& g,
                  const FourierTransform& fft) {
    if (!(dt > 0.0)) throw ConfigError("dt must be > 0");
    if (state.psi1.grid != state.psi2.grid || state.psi1.grid != fft.grid() ||
        state.psi1.grid != v1.grid || state.psi1.grid != v2.grid)
        throw GridMismatch("step_coupled: grids differ");

    const auto table = kinetic_table(fft, dt);
    apply_kinetic(state.psi1, table.half, fft);
    apply_kinetic(state.psi2, table.half, fft);
    local_step(state.psi1, state.psi2, dt, pulse, v1, v2, g, state.time + 0.5 * dt);
    apply_kinetic(state.psi1, table.half, fft);
    apply_kinetic(state.psi2, table.half, fft);
    state.time += dt;
}

PropagationResult propagate_pulse(const GroundState& ground, const PulseSpec& pulse,
                                  const RealField& v1, const RealField& v2,
                                  const CouplingSet& g, double dt) {
    if (!(dt > 0.0)) throw ConfigError("dt must be > 0");
    if (!(pulse.duration > 0.0)) throw ConfigError("pulse duration must be > 0");
    const Grid& grid = ground.psi1.grid;
    FourierTransform fft(grid);

    const long steps = std::lround(pulse.duration / dt);
    const double dt_eff = pulse.duration / static_cast<double>(steps);
    const auto table = kinetic_table(fft, dt_eff);

    TwoComponentState state;
    state.psi1 = ground.psi1;
    state.psi2 = make_field(grid, 0.0);
    state.time = 0.0;

    // Strang steps with adjacent half-kinetic factors merged.
    apply_kinetic(state.psi1, table.half, fft);
    apply_kinetic(state.psi2, table.half, fft);
    for (long s = 0; s < steps; ++s) {
        local_step(state.psi1, state.psi2, dt_eff, pulse, v1, v2, g,
                   state.time + 0.5 * dt_eff);
        state.time = (s + 1) * dt_eff;
        const auto& tab = s + 1 == steps ? table.half : table.full;
        apply_kinetic(state.psi1, tab, fft);
        apply_kinetic(state.psi2, tab, fft);
        if ((s & 1023) == 0) {
            check_finite(state.psi1, s);
            check_finite(state.psi2, s);
        }
    }
    check_finite(state.psi1, steps);
    check_finite(state.psi2, steps);

    const double n1 = state.psi1.norm();
    const double n2 = state.psi2.norm();
    PropagationResult result;
    result.transfer_fraction = n2 / (n1 + n2);
    result.final = std::move(state);
    return result;
}

Spectrum sweep_detuning(const GroundState& ground, const PulseSpec& pulse_template,
                        const std::vector<double>& detunings_hz,
                        const RealField& v1, const RealField& v2,
                        const CouplingSet& g, double dt, int workers) {
    if (detunings_hz.empty()) throw ConfigError("sweep: empty detuning list");
    if (workers <= 0)
        workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, detunings_hz.size()));

    const int points = static_cast<int>(detunings_hz.size());
    std::vector<double> transfer(points, 0.0);
    std::vector<std::string> failures(points);
    std::atomic<int> next{0};

    auto work = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= points) return;
            try {
                const PulseSpec pulse = pulse_template.with_detuning_hz(detunings_hz[i]);
                transfer[i] =
                    propagate_pulse(ground, pulse, v1, v2, g, dt).transfer_fraction;
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    Spectrum spec;
    spec.normalization = Normalization::raw;
    int failed = 0;
    for (int i = 0; i < points; ++i) {
        if (!failures[i].empty()) {
            ++failed;
            std::cerr << "[becspec] sweep point " << detunings_hz[i]
                      << " Hz failed: " << failures[i] << "\n";
            continue;
        }
        spec.curve.push_back({detunings_hz[i], transfer[i]});
    }
    if (failed == points)
        throw SolverError("sweep: every detuning point failed");
    return spec;
}

}  // namespace becspec
