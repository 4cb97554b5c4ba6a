#pragma once

#include <Eigen/Dense>

namespace kernelpe {

/// Time-stamped ambient-space states. Times are strictly increasing and
/// near-uniform (max/min step ratio <= 1.01) so dwell-time quadrature is
/// well posed; the validating factory enforces both.
struct Trajectory {
    Eigen::VectorXd times;
    Eigen::MatrixXd states; // one row per time stamp

    int samples() const { return static_cast<int>(times.size()); }
    int dim() const { return static_cast<int>(states.cols()); }
    double median_dt() const;
    Eigen::VectorXd state(int i) const { return states.row(i).transpose(); }

    /// Index of the first sample with time >= t (samples() if none).
    int first_index_at_or_after(double t) const;
    /// Index of the last sample with time <= t (-1 if none).
    int last_index_at_or_before(double t) const;

    /// Post-transient view as a copy: samples with time >= t0.
    Trajectory tail_from(double t0) const;
};

Trajectory make_trajectory(Eigen::VectorXd times, Eigen::MatrixXd states);

} // namespace kernelpe
