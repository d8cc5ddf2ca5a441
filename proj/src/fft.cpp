#include "becspec/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace becspec {

namespace {
std::mutex planner_mutex;

std::vector<double> axis_frequencies(int n, double d) {
    std::vector<double> k(n);
    const double dk = 2.0 * constants::pi / (n * d);
    for (int i = 0; i < n; ++i) k[i] = (i < (n + 1) / 2 ? i : i - n) * dk;
    return k;
}
}  // namespace

struct FourierTransform::Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    ~Plans() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

FourierTransform::FourierTransform(const Grid& grid)
    : grid_(grid), plans_(std::make_unique<Plans>()) {
    const auto kx = axis_frequencies(grid.nx(), grid.spacing[0]);
    const auto ky = axis_frequencies(grid.ny(), grid.spacing[1]);
    const auto kz = axis_frequencies(grid.nz(), grid.spacing[2]);
    k2_.resize(grid.size());
    for (int iz = 0; iz < grid.nz(); ++iz)
        for (int iy = 0; iy < grid.ny(); ++iy)
            for (int ix = 0; ix < grid.nx(); ++ix)
                k2_[grid.index(ix, iy, iz)] =
                    kx[ix] * kx[ix] + ky[iy] * ky[iy] + kz[iz] * kz[iz];

    std::vector<std::complex<double>> dummy(grid.size());
    auto* ptr = reinterpret_cast<fftw_complex*>(dummy.data());
    // FFTW's fastest index is the last one; our layout has x fastest.
    std::lock_guard<std::mutex> lock(planner_mutex);
    plans_->fwd = fftw_plan_dft_3d(grid.nz(), grid.ny(), grid.nx(), ptr, ptr,
                                   FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_->bwd = fftw_plan_dft_3d(grid.nz(), grid.ny(), grid.nx(), ptr, ptr,
                                   FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
}

FourierTransform::~FourierTransform() = default;

void FourierTransform::forward(std::complex<double>* data) const {
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plans_->fwd, ptr, ptr);
}

void FourierTransform::backward(std::complex<double>* data) const {
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plans_->bwd, ptr, ptr);
    const double scale = 1.0 / static_cast<double>(grid_.size());
    const std::size_t n = grid_.size();
    for (std::size_t i = 0; i < n; ++i) data[i] *= scale;
}

}  // namespace becspec
