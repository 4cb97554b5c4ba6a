#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "kernelpe/center_set.hpp"
#include "kernelpe/kernel.hpp"

namespace kernelpe {

/// Matrix of kernel evaluations between two center collections.
///
/// entries(i, j) = R(cols_j, rows_i), so for a perturbed collection y the
/// matrix S(y) has rows indexed by the y's and columns by the reference
/// centers. When rows == cols the matrix is symmetric; it is then conditioned
/// to be SPD (diagonal jitter when nearly singular), eigen-decomposed, and
/// Cholesky-factored once so that later solves reuse the factor.
class GramMatrix {
public:
    GramMatrix() = default;

    const Eigen::MatrixXd& entries() const { return entries_; }
    int rows() const { return static_cast<int>(entries_.rows()); }
    int cols() const { return static_cast<int>(entries_.cols()); }

    bool square_symmetric() const { return square_symmetric_; }
    /// Smallest/largest eigenvalue (post-conditioning). Square symmetric only.
    double min_eig() const { return min_eig_; }
    double max_eig() const { return max_eig_; }
    /// Diagonal jitter applied by the conditioning step (0 when none).
    double jitter() const { return jitter_; }
    bool spd() const { return spd_; }

    const CenterSet& centers() const { return centers_; }
    const KernelSpec& kernel() const { return spec_; }

    /// Solve S * x = rhs through the cached Cholesky factor.
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

private:
    friend GramMatrix gram(const KernelSpec&, const CenterSet&, const CenterSet&);

    Eigen::MatrixXd entries_;
    CenterSet centers_; // the (shared) center set in the square symmetric case
    KernelSpec spec_;
    double min_eig_ = 0.0;
    double max_eig_ = 0.0;
    double jitter_ = 0.0;
    bool square_symmetric_ = false;
    bool spd_ = false;
    Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// Build S with entries(i, j) = R(cols_j, rows_i). Eigenvalues, conditioning
/// and the Cholesky factor are populated only when rows equals cols.
GramMatrix gram(const KernelSpec& spec, const CenterSet& rows, const CenterSet& cols);

/// Symmetric convenience overload, rows = cols = centers.
inline GramMatrix gram(const KernelSpec& spec, const CenterSet& centers) {
    return gram(spec, centers, centers);
}

} // namespace kernelpe
