#pragma once

#include <vector>

#include "becspec/energy.hpp"
#include "becspec/field.hpp"
#include "becspec/potential.hpp"

namespace becspec {

struct ConvergenceReport {
    long iterations = 0;
    double final_residual = 0.0;   // last relative energy change per step
    double max_energy_rise = 0.0;  // largest relative per-step energy increase
    bool converged = false;
};

struct GroundState {
    ComplexField psi1;        // normalized to n_atoms
    double mu = 0.0;          // J, (E_kin + E_pot + 2 E_int) / N
    EnergyBreakdown energies;
    double n_atoms = 0.0;
    ConvergenceReport report;
};

struct GroundstateOptions {
    double dt = 0.0;          // s; 0 selects 0.1 / omega_max
    double tol = 1e-10;       // relative energy change per step
    long max_iter = 200000;
    bool effective_1d = false;  // rescale couplings for a 1D grid
};

/// Norm-preserving imaginary-time split-step iteration from a Gaussian seed.
/// The local substep uses the exact decay solution with the instantaneous
/// density; the renormalization target compensates the expected one-step norm
/// decay so the fixed point carries only the O(dt^2) splitting bias.
/// Throws SolverError with the residual history on non-convergence or NaN.
GroundState solve_groundstate(const Grid& grid, const TrapSpec& trap,
                              const InteractionSpec& inter, double n_atoms,
                              const GroundstateOptions& opts = {});

/// (hbar wbar / 2) (15 N a11 / a_ho)^(2/5)
double thomas_fermi_mu(const TrapSpec& trap, const InteractionSpec& inter,
                       double n_atoms);

/// Thomas-Fermi radius along one axis, sqrt(2 mu_TF / (m omega^2)).
double thomas_fermi_radius(const TrapSpec& trap, const InteractionSpec& inter,
                           double n_atoms, int axis);

/// Mean-field shift of the carrier line, mu (a12/a11 - 1) / h, in Hz.
double carrier_shift_hz(double mu, const InteractionSpec& inter);

/// Condensation temperature in K. The ideal value is
/// k_B T_c0 = hbar wbar (N / zeta(3))^(1/3); with corrections enabled the
/// finite-size and interaction shifts
/// dT/T = -0.73 (w_m/wbar) N^(-1/3) - 1.33 (a11/a_ho) N^(1/6) are applied.
double critical_temperature(const TrapSpec& trap, const InteractionSpec& inter,
                            double n_atoms, bool corrections);

}  // namespace becspec
