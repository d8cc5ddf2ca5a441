#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "becspec/grid.hpp"

namespace becspec {

/// Forward/backward complex FFTs for one grid plus the |k|^2 table used by
/// the spectral kinetic operator. Plans are created with FFTW_ESTIMATE so
/// results are reproducible across runs. Construction is serialized
/// internally (the FFTW planner is not thread safe); execution on distinct
/// arrays is safe from multiple threads.
class FourierTransform {
public:
    explicit FourierTransform(const Grid& grid);
    ~FourierTransform();
    FourierTransform(const FourierTransform&) = delete;
    FourierTransform& operator=(const FourierTransform&) = delete;

    const Grid& grid() const { return grid_; }

    /// Unnormalized forward transform, in place.
    void forward(std::complex<double>* data) const;
    /// Inverse transform, in place, scaled by 1/size.
    void backward(std::complex<double>* data) const;

    /// |k|^2 per grid point in FFT layout, 1/m^2.
    const std::vector<double>& k_squared() const { return k2_; }

private:
    Grid grid_;
    std::vector<double> k2_;
    struct Plans;
    std::unique_ptr<Plans> plans_;
};

}  // namespace becspec
