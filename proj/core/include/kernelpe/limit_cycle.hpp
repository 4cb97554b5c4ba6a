#pragma once

#include "kernelpe/manifold.hpp"
#include "kernelpe/trajectory.hpp"

namespace kernelpe {

struct PeriodEstimate {
    double t_p = 0.0;       // seconds
    double confidence = 0.0; // normalized autocorrelation peak height, in [0, 1]
};

/// Dominant period of the first state coordinate after transient_time,
/// from the unbiased autocorrelation's strongest positive-lag peak with
/// parabolic refinement. Throws analysis_error when no peak of height >= 0.5
/// exists within a third of the post-transient span.
PeriodEstimate detect_period(const Trajectory& traj, double transient_time);

/// One detected period of the post-transient trajectory, resampled to a
/// closed polyline with resample_n arclength-equispaced vertices.
ManifoldModel extract_limit_cycle(const Trajectory& traj, double transient_time,
                                  int resample_n = 1024);

/// Centers equispaced in arclength along a polyline loop.
CenterSet equispaced_centers(const ManifoldModel& loop, int count);

} // namespace kernelpe
