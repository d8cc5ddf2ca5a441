#include "becspec/potential.hpp"

#include <cmath>

#include "becspec/errors.hpp"

namespace becspec {

using namespace constants;

RealField trap_potential(const TrapSpec& trap, const Grid& grid, int species,
                         bool include_quartic) {
    if (species != 1 && species != 2)
        throw ConfigError("species must be 1 or 2");
    trap.validate();

    const double wx = trap.omega(0), wy = trap.omega(1), wz = trap.omega(2);
    const double shift = species == 2 ? trap.delta_x : 0.0;
    const double offset = species == 2 ? planck * trap.bottom_offset_hz : 0.0;
    const double half_m = 0.5 * mass_rb87;
    const double g2 = trap.gamma * trap.gamma;

    RealField v;
    v.grid = grid;
    v.values.resize(grid.size());
    for (int iz = 0; iz < grid.nz(); ++iz) {
        const double z = grid.coord(2, iz);
        for (int iy = 0; iy < grid.ny(); ++iy) {
            const double y = grid.coord(1, iy);
            const double transverse = half_m * (wy * wy * y * y + wz * wz * z * z);
            for (int ix = 0; ix < grid.nx(); ++ix) {
                const double x = grid.coord(0, ix) - shift;
                double val = half_m * wx * wx * x * x + transverse + offset;
                if (include_quartic) val += half_m * g2 * x * x * x * x;
                v.values[grid.index(ix, iy, iz)] = val;
            }
        }
    }
    return v;
}

}  // namespace becspec
