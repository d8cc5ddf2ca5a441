#include "becspec/groundstate.hpp"

#include <cmath>

#include "becspec/errors.hpp"
#include "becspec/fft.hpp"

namespace becspec {

using namespace constants;

double thomas_fermi_mu(const TrapSpec& trap, const InteractionSpec& inter,
                       double n_atoms) {
    if (n_atoms <= 0.0 || inter.a11_a0 <= 0.0) return 0.0;
    const double wbar = trap.omega_bar();
    const double a_ho = std::sqrt(hbar / (mass_rb87 * wbar));
    return 0.5 * hbar * wbar * std::pow(15.0 * n_atoms * inter.a11() / a_ho, 0.4);
}

double thomas_fermi_radius(const TrapSpec& trap, const InteractionSpec& inter,
                           double n_atoms, int axis) {
    const double mu = thomas_fermi_mu(trap, inter, n_atoms);
    const double w = trap.omega(axis);
    return mu > 0.0 ? std::sqrt(2.0 * mu / (mass_rb87 * w * w)) : 0.0;
}

double carrier_shift_hz(double mu, const InteractionSpec& inter) {
    if (!(inter.a11_a0 > 0.0)) throw ConfigError("carrier shift requires a11 > 0");
    return mu * (inter.a12_a0 / inter.a11_a0 - 1.0) / planck;
}

double critical_temperature(const TrapSpec& trap, const InteractionSpec& inter,
                            double n_atoms, bool corrections) {
    if (n_atoms < 2.0) throw ConfigError("critical temperature requires N >= 2");
    const double wbar = trap.omega_bar();
    const double tc0 = hbar * wbar / k_boltzmann * std::cbrt(n_atoms / zeta3);
    if (!corrections) return tc0;
    const double a_ho = std::sqrt(hbar / (mass_rb87 * wbar));
    const double finite_size =
        -0.73 * (trap.omega_arith() / wbar) * std::pow(n_atoms, -1.0 / 3.0);
    const double interaction =
        -1.33 * (inter.a11() / a_ho) * std::pow(n_atoms, 1.0 / 6.0);
    return tc0 * (1.0 + finite_size + interaction);
}

namespace {

// Exact decay factor of the local substep d(psi)/dt = -(V + g rho) psi / hbar
// over tau, per point: |psi| -> |psi| / sqrt(e^z + beta tau g rho phi(z)) with
// z = beta V tau, beta = 2/hbar, phi(z) = (e^z - 1)/z. The phase is unchanged.
inline double local_decay_factor(double v, double rho, double g, double tau) {
    const double beta = 2.0 / hbar;
    const double z = beta * v * tau;
    const double phi = std::abs(z) > 1e-12 ? std::expm1(z) / z : 1.0 + 0.5 * z;
    const double denom = std::exp(z) + beta * tau * g * rho * phi;
    return 1.0 / std::sqrt(denom);
}

ComplexField gaussian_seed(const Grid& grid, const TrapSpec& trap, double n_atoms) {
    ComplexField psi = make_field(grid, n_atoms);
    const double sx = trap.oscillator_length(0);
    const double sy = trap.oscillator_length(1);
    const double sz = trap.oscillator_length(2);
    for (int iz = 0; iz < grid.nz(); ++iz) {
        const double z = grid.coord(2, iz);
        for (int iy = 0; iy < grid.ny(); ++iy) {
            const double y = grid.coord(1, iy);
            for (int ix = 0; ix < grid.nx(); ++ix) {
                const double x = grid.coord(0, ix);
                const double arg = 0.5 * (x * x / (sx * sx) + y * y / (sy * sy) +
                                          z * z / (sz * sz));
                psi.values[grid.index(ix, iy, iz)] = std::exp(-arg);
            }
        }
    }
    psi.renormalize();
    return psi;
}

}  // namespace

GroundState solve_groundstate(const Grid& grid, const TrapSpec& trap,
                              const InteractionSpec& inter, double n_atoms,
                              const GroundstateOptions& opts) {
    if (n_atoms < 1.0) throw ConfigError("solve_groundstate requires N >= 1");
    if (opts.tol <= 0.0) throw ConfigError("solver tol must be > 0");
    if (opts.effective_1d && (grid.ny() != 1 || grid.nz() != 1))
        throw ConfigError("effective_1d requires a 1D grid");

    const double dt = opts.dt > 0.0 ? opts.dt : 0.1 / trap.omega_max();
    const CouplingSet g = opts.effective_1d ? couplings_effective_1d(inter, trap)
                                            : couplings_3d(inter);
    const RealField v = trap_potential(trap, grid, 1);
    FourierTransform fft(grid);

    // Kinetic decay factor for a full step.
    const std::size_t n = grid.size();
    std::vector<double> kin(n);
    for (std::size_t i = 0; i < n; ++i)
        kin[i] = std::exp(-hbar * fft.k_squared()[i] / (2.0 * mass_rb87) * dt);

    ComplexField psi = gaussian_seed(grid, trap, n_atoms);

    GroundState gs;
    gs.n_atoms = n_atoms;
    std::vector<double> residuals;
    residuals.reserve(1024);

    auto local_half = [&](ComplexField& f, double tau) {
        for (std::size_t i = 0; i < n; ++i) {
            const double rho = std::norm(f.values[i]);
            f.values[i] *= local_decay_factor(v.values[i], rho, g.g11, tau);
        }
    };

    double e_old = 0.0;
    bool have_old = false;
    int streak = 0;
    for (long it = 0; it < opts.max_iter; ++it) {
        local_half(psi, 0.5 * dt);
        fft.forward(psi.values.data());
        for (std::size_t i = 0; i < n; ++i) psi.values[i] *= kin[i];
        fft.backward(psi.values.data());
        local_half(psi, 0.5 * dt);

        const double nrm = psi.norm();
        if (!std::isfinite(nrm) || nrm <= 0.0)
            throw SolverError("imaginary-time iteration produced a non-finite norm",
                              residuals);

        // Measure on the N-normalized state.
        const double to_n = std::sqrt(n_atoms / nrm);
        for (auto& val : psi.values) val *= to_n;
        gs.energies = energy_functionals(psi, v, g.g11, fft);
        const double e = gs.energies.total();
        gs.mu = (gs.energies.kinetic + gs.energies.potential +
                 2.0 * gs.energies.interaction) / n_atoms;
        if (!std::isfinite(e))
            throw SolverError("imaginary-time iteration produced a non-finite energy",
                              residuals);

        // Renormalize to the midpoint-compensated target: the norm decays by
        // e^{-2 mu dt / hbar} across a step, so starting above N keeps the
        // density seen by the nonlinear term centred on N and the fixed point
        // second-order accurate in dt.
        const double comp = std::exp(0.5 * gs.mu * dt / hbar);
        for (auto& val : psi.values) val *= comp;

        double rel = 1.0;
        if (have_old) {
            rel = std::abs(e - e_old) / std::abs(e);
            residuals.push_back(rel);
            const double rise = (e - e_old) / std::abs(e_old);
            if (rise > gs.report.max_energy_rise) gs.report.max_energy_rise = rise;
        }
        gs.report.iterations = it + 1;
        gs.report.final_residual = rel;

        streak = rel < opts.tol ? streak + 1 : 0;
        if (streak >= 5) {
            gs.report.converged = true;
            break;
        }
        e_old = e;
        have_old = true;
    }

    if (!gs.report.converged)
        throw SolverError("groundstate solve did not converge within max_iter",
                          residuals);

    // Undo the compensation factor and fix the global phase so the returned
    // state is real positive.
    psi.renormalize();
    complex peak{0.0, 0.0};
    double best = -1.0;
    for (const auto& val : psi.values) {
        const double a = std::norm(val);
        if (a > best) {
            best = a;
            peak = val;
        }
    }
    const complex phase = peak / std::abs(peak);
    for (auto& val : psi.values) val /= phase;

    gs.psi1 = std::move(psi);
    return gs;
}

}  // namespace becspec
