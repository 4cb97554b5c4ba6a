#include "kernelpe/plant.hpp"

#include <Eigen/Eigenvalues>
#include <iostream>

#include "kernelpe/errors.hpp"

namespace kernelpe {

double hurwitz_margin(const Eigen::MatrixXd& A) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
    return es.eigenvalues().real().maxCoeff();
}

PlantModel make_plant(Eigen::MatrixXd A, Eigen::VectorXd B, ScalarField f_true,
                      double state_scaling, bool require_hurwitz) {
    if (A.rows() != A.cols()) {
        throw input_error("make_plant: A must be square");
    }
    if (B.size() != A.rows()) {
        throw input_error("make_plant: B length must match A");
    }
    if (!f_true) {
        throw input_error("make_plant: f_true must be callable");
    }
    if (!(state_scaling > 0.0)) {
        throw input_error("make_plant: state_scaling must be positive");
    }
    const double margin = hurwitz_margin(A);
    if (margin >= 0.0) {
        if (require_hurwitz) {
            throw input_error("make_plant: A is not Hurwitz (max Re(eig) = " +
                              std::to_string(margin) + ")");
        }
        std::cerr << "[kernelpe] warning: plant matrix A is not Hurwitz (max Re(eig) = "
                  << margin << "); proceeding\n";
    }
    PlantModel p;
    p.A = std::move(A);
    p.B = std::move(B);
    p.f_true = std::move(f_true);
    p.state_scaling = state_scaling;
    return p;
}

} // namespace kernelpe
