#pragma once

#include <utility>
#include <vector>

#include "becspec/field.hpp"
#include "becspec/groundstate.hpp"

namespace becspec {

enum class PotentialModel { hartree_fock, anharmonic };

enum class PotentialProvenance {
    hartree_fock_1,  // V1 + 2 g11 |psi1|^2
    mean_field_2,    // V2 + g12 |psi1|^2
    anharmonic_1,    // V1 + m/2 gamma^2 x^4
    anharmonic_2,    // V2 + m/2 gamma^2 (x - dx)^4
};

struct EffectivePotential {
    int species = 1;
    RealField values;
    PotentialProvenance provenance = PotentialProvenance::hartree_fock_1;
};

/// Potential part of the single-particle operator for the requested species
/// and model. The hartree_fock model requires a ground state (ConfigError
/// otherwise); the anharmonic model must be called without one.
EffectivePotential effective_potential(int species, const GroundState* ground,
                                       const TrapSpec& trap,
                                       const InteractionSpec& inter,
                                       PotentialModel model, const Grid& grid);

struct EigenSet {
    std::vector<double> energies;       // ascending, J
    std::vector<ComplexField> modes;    // each normalized to 1
    std::vector<double> residuals;      // ||H psi - E psi||, J
    int k() const { return static_cast<int>(energies.size()); }
};

struct LanczosOptions {
    int max_basis = 192;       // Krylov vectors kept per cycle
    int max_restarts = 60;     // thick-restart cycles
    double residual_tol = 0;   // J; 0 selects 1e-9 * operator scale
    int max_k = 64;
    unsigned seed = 0x5eed;    // start vector, fixed for reproducibility
};

/// Lowest k eigenpairs of -(hbar^2/2m) Lap + pot, kinetic term applied
/// spectrally. Thick-restart Lanczos with full reorthogonalization; throws
/// SolverError with the per-mode residuals if restarts are exhausted.
EigenSet lowest_eigenpairs(const EffectivePotential& pot, const Grid& grid,
                           int k, const LanczosOptions& opts = {});

/// The two 1D anharmonic spectra along x (species 1 and species 2 wells).
/// The grid is sized from k so the classical turning point of the highest
/// requested mode is well inside the box.
std::pair<EigenSet, EigenSet> anharmonic_modes_1d(const TrapSpec& trap, int k,
                                                  int nx = 2048,
                                                  const LanczosOptions& opts = {});

}  // namespace becspec
