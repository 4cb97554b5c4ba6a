#pragma once

#include <Eigen/Dense>
#include <functional>

#include "kernelpe/rkhs_function.hpp"

namespace kernelpe {

/// Plant x' = A x + B f(x) with a scalar unknown nonlinearity f.
struct PlantModel {
    Eigen::MatrixXd A;
    Eigen::VectorXd B;
    ScalarField f_true;
    /// Scaling already folded into A/B/f when the model was built in scaled
    /// coordinates; recorded for configuration echo.
    double state_scaling = 1.0;

    int dim() const { return static_cast<int>(A.rows()); }
};

/// Largest real part over the eigenvalues of A (negative iff Hurwitz).
double hurwitz_margin(const Eigen::MatrixXd& A);

/// Validating constructor. require_hurwitz=false downgrades the Hurwitz check
/// to a stderr warning (marginally stable oscillators).
PlantModel make_plant(Eigen::MatrixXd A, Eigen::VectorXd B, ScalarField f_true,
                      double state_scaling = 1.0, bool require_hurwitz = true);

} // namespace kernelpe
