#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "kernelpe/center_set.hpp"
#include "kernelpe/gram.hpp"
#include "kernelpe/kernel.hpp"

namespace kernelpe {

using ScalarField = std::function<double(const Eigen::VectorXd&)>;

/// Finite kernel expansion g = sum_i alpha_i R(x_i, .).
class RkhsFunction {
public:
    RkhsFunction() = default;
    RkhsFunction(KernelSpec spec, CenterSet centers, Eigen::VectorXd coefficients);

    double evaluate(const Eigen::VectorXd& x) const;
    double operator()(const Eigen::VectorXd& x) const { return evaluate(x); }

    const KernelSpec& kernel() const { return spec_; }
    const CenterSet& centers() const { return centers_; }
    const Eigen::VectorXd& coefficients() const { return coeffs_; }

private:
    KernelSpec spec_;
    CenterSet centers_;
    Eigen::VectorXd coeffs_;
};

/// RKHS norm sqrt(alpha^T S alpha); S must be the symmetric Gram on f's centers.
double rkhs_norm(const RkhsFunction& f, const GramMatrix& S);

/// Interpolating projection onto span{R(x_i, .)}: solves S alpha = values.
RkhsFunction project(const Eigen::VectorXd& f_values_at_centers, const GramMatrix& S);

/// v_n(p) = f(p) - proj(p) at each query point; vanishes at proj's centers.
Eigen::VectorXd complementary_values(const ScalarField& f, const RkhsFunction& proj,
                                     const std::vector<Eigen::VectorXd>& points);

/// Sampled estimate of the uniform norm: max |values_i|.
double sup_norm_estimate(const Eigen::VectorXd& values);

} // namespace kernelpe
