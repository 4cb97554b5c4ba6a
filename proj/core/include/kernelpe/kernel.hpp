#pragma once

#include <Eigen/Dense>

#include "kernelpe/center_set.hpp"

namespace kernelpe {

enum class KernelFamily {
    sobolev_matern_3_2,
};

/// Strictly positive-definite kernel; the restriction to a manifold uses the
/// same pointwise values, so one spec serves both roles.
struct KernelSpec {
    KernelFamily family = KernelFamily::sobolev_matern_3_2;
    double length_scale = 1.0;
};

/// R(x, y) = (1 + sqrt(3)||x-y||/l) * exp(-sqrt(3)||x-y||/l). Symmetric,
/// values in (0, 1], R(x, x) = 1.
double eval_kernel(const KernelSpec& spec, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Vector of kernel sections evaluated at x: [R(x_1, x), ..., R(x_n, x)].
Eigen::VectorXd kernel_vector(const KernelSpec& spec, const CenterSet& centers,
                              const Eigen::VectorXd& x);

} // namespace kernelpe
