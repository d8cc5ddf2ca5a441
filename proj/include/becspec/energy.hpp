#pragma once

#include "becspec/fft.hpp"
#include "becspec/field.hpp"

namespace becspec {

struct EnergyBreakdown {
    double kinetic = 0.0;      // J
    double potential = 0.0;    // J
    double interaction = 0.0;  // J
    double total() const { return kinetic + potential + interaction; }
};

/// E_kin through the spectral Laplacian, E_pot = int V |psi|^2,
/// E_int = (g/2) int |psi|^4.
EnergyBreakdown energy_functionals(const ComplexField& psi, const RealField& v,
                                   double g, const FourierTransform& fft);

EnergyBreakdown energy_functionals(const ComplexField& psi, const RealField& v,
                                   double g);

}  // namespace becspec
