#include "kernelpe/grid.hpp"

#include <cmath>

#include "kernelpe/errors.hpp"

namespace kernelpe {

long GridSpec::total_points() const {
    long total = 1;
    for (Eigen::Index i = 0; i < resolution.size(); ++i) total *= resolution(i);
    return total;
}

GridField pointwise_error_grid(const ScalarField& f_true, const RkhsFunction& f_hat,
                               const GridSpec& grid) {
    const int d = grid.dim();
    if (d == 0 || grid.hi.size() != d || grid.resolution.size() != d) {
        throw input_error("pointwise_error_grid: inconsistent grid spec");
    }
    for (int i = 0; i < d; ++i) {
        if (grid.resolution(i) < 2) {
            throw input_error("pointwise_error_grid: resolution must be >= 2 per axis");
        }
        if (!(grid.hi(i) > grid.lo(i))) {
            throw input_error("pointwise_error_grid: bounds must satisfy lo < hi");
        }
    }

    const long total = grid.total_points();
    GridField field;
    field.points.resize(total, d);
    field.values.resize(total);

    Eigen::VectorXi idx = Eigen::VectorXi::Zero(d);
    Eigen::VectorXd p(d);
    for (long k = 0; k < total; ++k) {
        for (int i = 0; i < d; ++i) {
            p(i) = grid.lo(i) + idx(i) * (grid.hi(i) - grid.lo(i)) / (grid.resolution(i) - 1);
        }
        field.points.row(k) = p.transpose();
        field.values(k) = std::abs(f_true(p) - f_hat.evaluate(p));
        // Odometer increment, last axis fastest.
        for (int i = d - 1; i >= 0; --i) {
            if (++idx(i) < grid.resolution(i)) break;
            idx(i) = 0;
        }
    }
    return field;
}

} // namespace kernelpe
