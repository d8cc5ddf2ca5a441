#pragma once

#include "becspec/field.hpp"

namespace becspec {

/// Harmonic trap potential in J for species 1 or 2.
/// Species 1: m/2 (wx^2 x^2 + wy^2 y^2 + wz^2 z^2) [+ m/2 gamma^2 x^4].
/// Species 2: the same functional form evaluated analytically at x - delta_x,
/// plus h * bottom_offset. The shift is never applied by resampling.
RealField trap_potential(const TrapSpec& trap, const Grid& grid, int species,
                         bool include_quartic = false);

}  // namespace becspec
