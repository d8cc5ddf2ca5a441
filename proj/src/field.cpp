#include "becspec/field.hpp"

#include <cmath>

#include "becspec/errors.hpp"

namespace becspec {

double ComplexField::norm() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return s * grid.dv();
}

void ComplexField::renormalize() {
    const double n = norm();
    if (!(n > 0.0)) throw SolverError("cannot renormalize a zero field");
    const double scale = std::sqrt(norm_target / n);
    for (auto& v : values) v *= scale;
}

ComplexField make_field(const Grid& grid, double norm_target) {
    ComplexField f;
    f.grid = grid;
    f.values.assign(grid.size(), complex{0.0, 0.0});
    f.norm_target = norm_target;
    return f;
}

complex inner_product(const ComplexField& f, const ComplexField& g) {
    if (f.grid != g.grid) throw GridMismatch("inner_product: grids differ");
    complex s{0.0, 0.0};
    const std::size_t n = f.values.size();
    for (std::size_t i = 0; i < n; ++i) s += std::conj(f.values[i]) * g.values[i];
    return s * f.grid.dv();
}

}  // namespace becspec
