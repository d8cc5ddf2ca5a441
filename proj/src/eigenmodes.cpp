#include "becspec/eigenmodes.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "becspec/errors.hpp"
#include "becspec/fft.hpp"
#include "becspec/potential.hpp"

namespace becspec {

using namespace constants;

EffectivePotential effective_potential(int species, const GroundState* ground,
                                       const TrapSpec& trap,
                                       const InteractionSpec& inter,
                                       PotentialModel model, const Grid& grid) {
    if (species != 1 && species != 2) throw ConfigError("species must be 1 or 2");
    EffectivePotential pot;
    pot.species = species;

    if (model == PotentialModel::hartree_fock) {
        if (!ground)
            throw ConfigError("hartree_fock effective potential requires a ground state");
        if (ground->psi1.grid != grid)
            throw GridMismatch("ground state grid does not match requested grid");
        pot.values = trap_potential(trap, grid, species, false);
        const double g = species == 1 ? 2.0 * inter.g11() : inter.g12();
        const std::size_t n = grid.size();
        for (std::size_t i = 0; i < n; ++i)
            pot.values.values[i] += g * std::norm(ground->psi1.values[i]);
        pot.provenance = species == 1 ? PotentialProvenance::hartree_fock_1
                                      : PotentialProvenance::mean_field_2;
    } else {
        if (ground)
            throw ConfigError("anharmonic effective potential takes no ground state");
        pot.values = trap_potential(trap, grid, species, true);
        pot.provenance = species == 1 ? PotentialProvenance::anharmonic_1
                                      : PotentialProvenance::anharmonic_2;
    }
    return pot;
}

namespace {

// H = -(hbar^2/2m) Lap + V applied to a real vector through the spectral
// Laplacian. The Hamiltonian is real symmetric, so the whole Krylov iteration
// stays in real arithmetic.
class GridHamiltonian {
public:
    GridHamiltonian(const RealField& v, const Grid& grid)
        : v_(v), fft_(grid), buf_(grid.size()) {
        t_.resize(grid.size());
        const double fac = hbar * hbar / (2.0 * mass_rb87);
        for (std::size_t i = 0; i < t_.size(); ++i)
            t_[i] = fac * fft_.k_squared()[i];
    }

    void apply(const double* x, double* y) {
        const std::size_t n = buf_.size();
        for (std::size_t i = 0; i < n; ++i) buf_[i] = complex{x[i], 0.0};
        fft_.forward(buf_.data());
        for (std::size_t i = 0; i < n; ++i) buf_[i] *= t_[i];
        fft_.backward(buf_.data());
        for (std::size_t i = 0; i < n; ++i)
            y[i] = buf_[i].real() + v_.values[i] * x[i];
    }

private:
    const RealField& v_;
    FourierTransform fft_;
    std::vector<complex> buf_;
    std::vector<double> t_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void axpy(double a, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

EigenSet lowest_eigenpairs(const EffectivePotential& pot, const Grid& grid,
                           int k, const LanczosOptions& opts) {
    if (k < 1) throw ConfigError("k must be >= 1");
    if (k > opts.max_k) throw ConfigError("k exceeds the configured cap");
    if (pot.values.grid != grid) throw GridMismatch("potential grid mismatch");
    const std::size_t n = grid.size();
    if (static_cast<std::size_t>(4 * k) > n)
        throw ConfigError("k is too large for this grid");

    GridHamiltonian ham(pot.values, grid);

    const int max_m = std::max(opts.max_basis, 2 * k + 24);
    std::vector<std::vector<double>> basis;
    basis.reserve(max_m);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(max_m, max_m);

    std::mt19937 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> w(n);
    for (auto& val : w) val = gauss(rng);
    {
        const double nn = norm2(w);
        for (auto& val : w) val /= nn;
    }
    basis.push_back(w);

    std::vector<double> hq(n);
    int m = 1;
    double beta = 0.0;
    double opscale = 0.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;

    auto ritz_residuals = [&](int mm, int kk) {
        es.compute(b.topLeftCorner(mm, mm));
        std::vector<double> r(kk);
        for (int i = 0; i < kk; ++i)
            r[i] = std::abs(beta * es.eigenvectors()(mm - 1, i));
        return r;
    };

    auto materialize = [&](int mm, int count) {
        std::vector<std::vector<double>> vecs(count, std::vector<double>(n, 0.0));
        for (int j = 0; j < mm; ++j)
            for (int i = 0; i < count; ++i)
                axpy(es.eigenvectors()(j, i), basis[j], vecs[i]);
        return vecs;
    };

    int restarts = 0;
    bool exhausted = false;
    while (true) {
        // Extend the basis one vector at a time with full reorthogonalization.
        while (m < max_m && static_cast<std::size_t>(m) < n) {
            ham.apply(basis[m - 1].data(), hq.data());
            for (int i = 0; i < m; ++i) {
                const double c = dot(basis[i], hq);
                b(i, m - 1) = c;
                b(m - 1, i) = c;
                axpy(-c, basis[i], hq);
            }
            for (int i = 0; i < m; ++i) axpy(-dot(basis[i], hq), basis[i], hq);
            beta = norm2(hq);
            opscale = std::max(opscale, std::abs(b(m - 1, m - 1)));

            if (beta < 1e-13 * std::max(opscale, 1e-300)) {
                exhausted = true;
                break;
            }
            if (m < max_m) {
                b(m, m - 1) = beta;
                b(m - 1, m) = beta;
            }
            for (std::size_t i = 0; i < n; ++i) hq[i] /= beta;
            basis.push_back(hq);
            ++m;

            const double tol = opts.residual_tol > 0.0 ? opts.residual_tol
                                                       : 1e-9 * opscale;
            if (m >= std::max(2 * k, k + 20) && m % 10 == 0) {
                const auto res = ritz_residuals(m - 1, k);
                if (*std::max_element(res.begin(), res.end()) < tol) break;
            }
            if (static_cast<std::size_t>(m) >= n) {
                exhausted = true;
                break;
            }
        }

        const double tol = opts.residual_tol > 0.0 ? opts.residual_tol
                                                   : 1e-9 * opscale;
        const int mm = exhausted ? m : m - 1;
        auto res = ritz_residuals(mm, std::min(k, mm));
        const bool done = exhausted ||
                          (mm >= k &&
                           *std::max_element(res.begin(), res.end()) < tol);
        if (done) {
            if (mm < k)
                throw SolverError("eigensolver: Krylov space exhausted below k", res);
            auto vecs = materialize(mm, k);

            EigenSet set;
            set.energies.resize(k);
            set.residuals.resize(k);
            for (int i = 0; i < k; ++i) {
                const double nn = norm2(vecs[i]);
                for (auto& val : vecs[i]) val /= nn;
                ham.apply(vecs[i].data(), hq.data());
                const double theta = dot(vecs[i], hq);
                axpy(-theta, vecs[i], hq);
                set.energies[i] = theta;
                set.residuals[i] = norm2(hq);
            }
            const double worst = *std::max_element(set.residuals.begin(),
                                                   set.residuals.end());
            if (!exhausted && worst > 10.0 * tol)
                throw SolverError("eigensolver: Ritz residual verification failed",
                                  set.residuals);

            // Ascending by construction for SelfAdjointEigenSolver output.
            const double amp = 1.0 / std::sqrt(grid.dv());
            for (int i = 0; i < k; ++i) {
                ComplexField mode = make_field(grid, 1.0);
                for (std::size_t j = 0; j < n; ++j)
                    mode.values[j] = complex{vecs[i][j] * amp, 0.0};
                set.modes.push_back(std::move(mode));
            }
            return set;
        }

        if (++restarts > opts.max_restarts)
            throw SolverError("eigensolver: restart budget exhausted", res);

        // Thick restart: keep the lowest Ritz vectors plus the residual
        // direction; the projected matrix becomes diagonal with a border row.
        const int keep = std::min(std::max(2 * k, k + 15), max_m - 8);
        es.compute(b.topLeftCorner(mm, mm));
        auto kept = materialize(mm, keep);
        std::vector<double> border(keep);
        for (int i = 0; i < keep; ++i)
            border[i] = beta * es.eigenvectors()(mm - 1, i);
        const Eigen::VectorXd theta = es.eigenvalues().head(keep);

        std::vector<double> cont = basis[mm];  // already normalized
        basis.assign(kept.begin(), kept.end());
        basis.push_back(std::move(cont));  // continues the recurrence
        b.setZero();
        for (int i = 0; i < keep; ++i) {
            b(i, i) = theta(i);
            b(i, keep) = border[i];
            b(keep, i) = border[i];
        }
        m = keep + 1;
    }
}

std::pair<EigenSet, EigenSet> anharmonic_modes_1d(const TrapSpec& trap, int k,
                                                  int nx,
                                                  const LanczosOptions& opts) {
    if (k < 2) throw ConfigError("anharmonic_modes_1d requires k >= 2");
    const double x_ho = trap.oscillator_length(0);
    // Box reaching well past the classical turning point of the highest mode.
    const double factor =
        4.0 * std::sqrt(2.0 * k + 1.0) + 8.0 * trap.delta_x / x_ho;
    const Grid grid = build_grid_1d(trap, nx, factor);

    LanczosOptions local = opts;
    if (local.residual_tol <= 0.0)
        local.residual_tol = 1e-8 * hbar * trap.omega(0);

    auto pot1 = effective_potential(1, nullptr, trap, {}, PotentialModel::anharmonic, grid);
    auto pot2 = effective_potential(2, nullptr, trap, {}, PotentialModel::anharmonic, grid);
    EigenSet set1 = lowest_eigenpairs(pot1, grid, k, local);
    EigenSet set2 = lowest_eigenpairs(pot2, grid, k, local);
    return {std::move(set1), std::move(set2)};
}

}  // namespace becspec
