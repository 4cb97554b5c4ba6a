#include "kernelpe/lyapunov.hpp"

#include <Eigen/LU>

#include "kernelpe/errors.hpp"

namespace kernelpe {

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q) {
    const Eigen::Index d = A.rows();
    if (A.cols() != d || Q.rows() != d || Q.cols() != d) {
        throw input_error("solve_lyapunov: A and Q must be square with matching size");
    }

    // vec(A^T P) = (I kron A^T) vec(P), vec(P A) = (A^T kron I) vec(P).
    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(d * d, d * d);
    const Eigen::MatrixXd At = A.transpose();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            op.block(i * d, j * d, d, d) = I(i, j) * At + At(i, j) * I;
        }
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(op);
    if (!lu.isInvertible()) {
        throw numeric_error("solve_lyapunov: Lyapunov operator singular (A not Hurwitz)");
    }
    Eigen::VectorXd q_vec = Eigen::Map<const Eigen::VectorXd>(Q.data(), d * d);
    Eigen::VectorXd p_vec = lu.solve(-q_vec);
    Eigen::MatrixXd P = Eigen::Map<Eigen::MatrixXd>(p_vec.data(), d, d);
    P = 0.5 * (P + P.transpose()).eval();

    const double residual = (A.transpose() * P + P * A + Q).norm();
    if (residual > 1e-10 * Q.norm()) {
        throw numeric_error("solve_lyapunov: residual exceeds tolerance (A likely not Hurwitz)");
    }
    return P;
}

} // namespace kernelpe
