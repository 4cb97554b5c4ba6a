#include "kernelpe/kernel.hpp"

#include <cmath>

#include "kernelpe/errors.hpp"

namespace kernelpe {

double eval_kernel(const KernelSpec& spec, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) {
        throw input_error("eval_kernel: dimension mismatch (" + std::to_string(x.size()) +
                          " vs " + std::to_string(y.size()) + ")");
    }
    if (!(spec.length_scale > 0.0)) {
        throw input_error("eval_kernel: length_scale must be positive");
    }
    const double u = std::sqrt(3.0) * (x - y).norm() / spec.length_scale;
    return (1.0 + u) * std::exp(-u);
}

Eigen::VectorXd kernel_vector(const KernelSpec& spec, const CenterSet& centers,
                              const Eigen::VectorXd& x) {
    Eigen::VectorXd r(centers.size());
    for (int i = 0; i < centers.size(); ++i) {
        r(i) = eval_kernel(spec, centers.point(i), x);
    }
    return r;
}

} // namespace kernelpe
