#pragma once

#include <array>
#include <cstddef>

#include "becspec/physics.hpp"

namespace becspec {

/// Uniform Cartesian grid centred on the state-1 trap minimum.
/// Coordinate of index i along an axis of n points is (i - n/2) * d.
/// Data layout is row-major with x fastest: offset = ix + nx*(iy + ny*iz).
struct Grid {
    std::array<int, 3> dims{0, 0, 0};
    std::array<double, 3> spacing{0.0, 0.0, 0.0};

    int nx() const { return dims[0]; }
    int ny() const { return dims[1]; }
    int nz() const { return dims[2]; }
    std::size_t size() const {
        return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
    }
    double dv() const { return spacing[0] * spacing[1] * spacing[2]; }
    double coord(int axis, int index) const {
        return (index - dims[axis] / 2) * spacing[axis];
    }
    double extent(int axis) const { return dims[axis] * spacing[axis]; }
    std::size_t index(int ix, int iy, int iz) const {
        return static_cast<std::size_t>(ix) +
               static_cast<std::size_t>(dims[0]) *
                   (static_cast<std::size_t>(iy) +
                    static_cast<std::size_t>(dims[1]) * iz);
    }
    bool operator==(const Grid&) const = default;
};

enum class HealingLengthPolicy { warn, strict };

/// Chooses grid spacing so that the extent per axis equals
/// extent_factor * max(oscillator length, Thomas-Fermi radius) for that axis.
/// Rejects dims that are not powers of two or smaller than 8 per axis.
/// A spacing that does not resolve the healing length with at least two
/// points warns on stderr (or throws under the strict policy).
Grid build_grid(const TrapSpec& trap, const InteractionSpec& inter, double n_atoms,
                std::array<int, 3> dims, double extent_factor,
                HealingLengthPolicy policy = HealingLengthPolicy::warn);

/// 1D grid along x (ny = nz = 1, unit transverse spacing). The extent covers
/// extent_factor times the x oscillator length.
Grid build_grid_1d(const TrapSpec& trap, int nx, double extent_factor);

bool is_power_of_two(int n);

}  // namespace becspec
