#pragma once

#include <complex>
#include <vector>

#include "becspec/grid.hpp"

namespace becspec {

using complex = std::complex<double>;

/// Real scalar field sampled on a grid (potentials, densities). Values in J
/// for potentials.
struct RealField {
    Grid grid;
    std::vector<double> values;
};

/// Complex wavefunction sampled on a grid, normalized to norm_target
/// particles: sum |psi|^2 dV = norm_target.
struct ComplexField {
    Grid grid;
    std::vector<complex> values;
    double norm_target = 1.0;

    /// sum |psi|^2 dV
    double norm() const;
    /// Rescales so that norm() == norm_target.
    void renormalize();
};

ComplexField make_field(const Grid& grid, double norm_target);

/// sum conj(f) g dV. Throws GridMismatch if the grids differ.
complex inner_product(const ComplexField& f, const ComplexField& g);

}  // namespace becspec
