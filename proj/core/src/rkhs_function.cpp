#include "kernelpe/rkhs_function.hpp"

#include <cmath>

#include "kernelpe/errors.hpp"

namespace kernelpe {

RkhsFunction::RkhsFunction(KernelSpec spec, CenterSet centers, Eigen::VectorXd coefficients)
    : spec_(spec), centers_(std::move(centers)), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != centers_.size()) {
        throw input_error("RkhsFunction: coefficient count does not match center count");
    }
}

double RkhsFunction::evaluate(const Eigen::VectorXd& x) const {
    return kernel_vector(spec_, centers_, x).dot(coeffs_);
}

double rkhs_norm(const RkhsFunction& f, const GramMatrix& S) {
    if (!S.square_symmetric() || S.rows() != f.centers().size() ||
        S.centers().points() != f.centers().points()) {
        throw input_error("rkhs_norm: Gram matrix was not built on the function's centers");
    }
    const Eigen::VectorXd& a = f.coefficients();
    const double q = a.dot(S.entries() * a);
    const double tol = 1e-12 * (1.0 + S.max_eig() * a.squaredNorm());
    if (q < -tol) {
        throw numeric_error("rkhs_norm: alpha^T S alpha negative beyond tolerance; S not SPD");
    }
    return std::sqrt(std::max(q, 0.0));
}

RkhsFunction project(const Eigen::VectorXd& f_values_at_centers, const GramMatrix& S) {
    if (!S.square_symmetric()) {
        throw input_error("project: need a square symmetric Gram matrix");
    }
    if (f_values_at_centers.size() != S.rows()) {
        throw input_error("project: value count does not match center count");
    }
    return RkhsFunction(S.kernel(), S.centers(), S.solve(f_values_at_centers));
}

Eigen::VectorXd complementary_values(const ScalarField& f, const RkhsFunction& proj,
                                     const std::vector<Eigen::VectorXd>& points) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(points.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = f(points[static_cast<std::size_t>(i)]) - proj.evaluate(points[static_cast<std::size_t>(i)]);
    }
    return v;
}

double sup_norm_estimate(const Eigen::VectorXd& values) {
    if (values.size() == 0) {
        throw input_error("sup_norm_estimate: empty sample vector");
    }
    return values.cwiseAbs().maxCoeff();
}

} // namespace kernelpe
