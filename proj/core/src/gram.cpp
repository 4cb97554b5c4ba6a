#include "kernelpe/gram.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "kernelpe/errors.hpp"

namespace kernelpe {

namespace {

// Near-singularity threshold and jitter scales for the conditioning step.
constexpr double kEigRatioFloor = 1e-12;
constexpr double kJitterFirst = 1e-10;
constexpr double kJitterRetry = 1e-8;

} // namespace

Eigen::VectorXd GramMatrix::solve(const Eigen::VectorXd& rhs) const {
    if (!spd_) {
        throw numeric_error("GramMatrix::solve: matrix is not SPD after conditioning");
    }
    if (rhs.size() != entries_.rows()) {
        throw input_error("GramMatrix::solve: rhs length mismatch");
    }
    return llt_.solve(rhs);
}

GramMatrix gram(const KernelSpec& spec, const CenterSet& rows, const CenterSet& cols) {
    if (rows.size() == 0 || cols.size() == 0) {
        throw input_error("gram: empty center set");
    }
    if (rows.dim() != cols.dim()) {
        throw input_error("gram: ambient dimension mismatch");
    }

    GramMatrix g;
    g.spec_ = spec;
    g.entries_.resize(rows.size(), cols.size());
    for (int i = 0; i < rows.size(); ++i) {
        const Eigen::VectorXd yi = rows.point(i);
        for (int j = 0; j < cols.size(); ++j) {
            const double v = eval_kernel(spec, cols.point(j), yi);
            if (!std::isfinite(v)) {
                throw numeric_error("gram: non-finite kernel value at entry (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            }
            g.entries_(i, j) = v;
        }
    }

    g.square_symmetric_ = rows.size() == cols.size() && rows.points() == cols.points();
    if (!g.square_symmetric_) {
        return g;
    }

    g.centers_ = rows;

    auto eig_range = [](const Eigen::MatrixXd& m) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
        return std::pair<double, double>{es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
    };

    auto [lo, hi] = eig_range(g.entries_);
    const int n = g.rows();
    const double trace_scale = g.entries_.trace() / n;
    const Eigen::MatrixXd base = g.entries_;
    for (double delta : {kJitterFirst, kJitterRetry}) {
        if (lo > kEigRatioFloor * hi) break;
        g.jitter_ = delta * trace_scale;
        g.entries_ = base + g.jitter_ * Eigen::MatrixXd::Identity(n, n);
        std::tie(lo, hi) = eig_range(g.entries_);
    }
    g.min_eig_ = lo;
    g.max_eig_ = hi;

    if (lo > 0.0) {
        g.llt_.compute(g.entries_);
        g.spd_ = g.llt_.info() == Eigen::Success;
    }
    return g;
}

} // namespace kernelpe
