#pragma once

#include <Eigen/Dense>

namespace kernelpe {

/// Symmetric P solving A^T P + P A = -Q for Hurwitz A and SPD Q, via the
/// vectorized d^2 x d^2 linear system (intended for d <= 10). Throws
/// numeric_error when the operator is singular (A has mirrored eigenvalues,
/// e.g. one at zero) or the residual exceeds 1e-10 * ||Q||_F.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q);

} // namespace kernelpe
