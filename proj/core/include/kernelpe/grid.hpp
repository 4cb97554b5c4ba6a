#pragma once

#include <Eigen/Dense>

#include "kernelpe/rkhs_function.hpp"

namespace kernelpe {

/// Rectangular lattice: resolution(i) points spanning [lo(i), hi(i)] per axis.
struct GridSpec {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;
    Eigen::VectorXi resolution;

    int dim() const { return static_cast<int>(lo.size()); }
    long total_points() const;
};

struct GridField {
    Eigen::MatrixXd points; // row-major over the lattice, first axis outermost
    Eigen::VectorXd values;
};

/// |f_true(p) - f_hat(p)| at each lattice point.
GridField pointwise_error_grid(const ScalarField& f_true, const RkhsFunction& f_hat,
                               const GridSpec& grid);

} // namespace kernelpe
