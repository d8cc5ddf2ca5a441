#include "becspec/grid.hpp"

#include <cmath>
#include <iostream>

#include "becspec/errors.hpp"

namespace becspec {

using namespace constants;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Forward declaration; defined in groundstate.cpp.
double thomas_fermi_mu(const TrapSpec& trap, const InteractionSpec& inter,
                       double n_atoms);

Grid build_grid(const TrapSpec& trap, const InteractionSpec& inter, double n_atoms,
                std::array<int, 3> dims, double extent_factor,
                HealingLengthPolicy policy) {
    trap.validate();
    if (!(extent_factor > 0.0)) throw ConfigError("grid extent_factor must be > 0");
    for (int axis = 0; axis < 3; ++axis) {
        if (dims[axis] < 8)
            throw ConfigError("grid dims must be at least 8 per axis");
        if (!is_power_of_two(dims[axis]))
            throw ConfigError("grid dims must be powers of two");
    }

    const double mu_tf = thomas_fermi_mu(trap, inter, n_atoms);
    Grid grid;
    grid.dims = dims;
    for (int axis = 0; axis < 3; ++axis) {
        const double x_ho = trap.oscillator_length(axis);
        const double w = trap.omega(axis);
        const double r_tf = mu_tf > 0.0 ? std::sqrt(2.0 * mu_tf / (mass_rb87 * w * w)) : 0.0;
        const double extent = extent_factor * std::max(x_ho, r_tf);
        grid.spacing[axis] = extent / dims[axis];
    }

    // Healing length check against the Thomas-Fermi peak density estimate.
    if (n_atoms > 0.0 && inter.a11_a0 > 0.0) {
        const double n0 = mu_tf / inter.g11();
        const double xi = 1.0 / std::sqrt(8.0 * pi * n0 * inter.a11());
        const double dmax = std::max({grid.spacing[0], grid.spacing[1], grid.spacing[2]});
        if (2.0 * dmax > xi) {
            if (policy == HealingLengthPolicy::strict)
                throw ConfigError("grid spacing does not resolve the healing length");
            std::cerr << "[becspec] warning: grid spacing " << dmax * 1e6
                      << " um resolves the healing length " << xi * 1e6
                      << " um with fewer than 2 points\n";
        }
    }
    return grid;
}

Grid build_grid_1d(const TrapSpec& trap, int nx, double extent_factor) {
    trap.validate();
    if (nx < 8 || !is_power_of_two(nx))
        throw ConfigError("1d grid size must be a power of two >= 8");
    if (!(extent_factor > 0.0)) throw ConfigError("grid extent_factor must be > 0");
    Grid grid;
    grid.dims = {nx, 1, 1};
    const double extent = extent_factor * trap.oscillator_length(0);
    grid.spacing = {extent / nx, 1.0, 1.0};
    return grid;
}

}  // namespace becspec
