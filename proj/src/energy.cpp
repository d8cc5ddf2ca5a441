#include "becspec/energy.hpp"

#include <cmath>

#include "becspec/errors.hpp"

namespace becspec {

using namespace constants;

EnergyBreakdown energy_functionals(const ComplexField& psi, const RealField& v,
                                   double g, const FourierTransform& fft) {
    if (psi.grid != v.grid || psi.grid != fft.grid())
        throw GridMismatch("energy_functionals: grids differ");

    const std::size_t n = psi.values.size();
    const double dv = psi.grid.dv();

    EnergyBreakdown e;
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = std::norm(psi.values[i]);
        e.potential += v.values[i] * rho;
        e.interaction += rho * rho;
    }
    e.potential *= dv;
    e.interaction *= 0.5 * g * dv;

    // Parseval: E_kin = sum (hbar^2 k^2 / 2m) |psi_k|^2 dV / size, with the
    // unnormalized forward transform.
    std::vector<complex> work(psi.values);
    fft.forward(work.data());
    const auto& k2 = fft.k_squared();
    const double t_fac = hbar * hbar / (2.0 * mass_rb87);
    double kin = 0.0;
    for (std::size_t i = 0; i < n; ++i) kin += k2[i] * std::norm(work[i]);
    e.kinetic = t_fac * kin * dv / static_cast<double>(n);
    return e;
}

EnergyBreakdown energy_functionals(const ComplexField& psi, const RealField& v,
                                   double g) {
    FourierTransform fft(psi.grid);
    return energy_functionals(psi, v, g, fft);
}

}  // namespace becspec
