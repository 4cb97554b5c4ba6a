#include "kernelpe/limit_cycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "kernelpe/errors.hpp"

namespace kernelpe {

namespace {

// Autocorrelation cost is O(N^2/3); subsample long records to keep period
// detection cheap on integrator-resolution trajectories.
constexpr int kMaxAutocorrSamples = 16384;

} // namespace

PeriodEstimate detect_period(const Trajectory& traj, double transient_time) {
    const Trajectory tail = traj.tail_from(transient_time);
    if (tail.samples() < 16) {
        throw input_error("detect_period: too few post-transient samples");
    }

    const int stride = (tail.samples() + kMaxAutocorrSamples - 1) / kMaxAutocorrSamples;
    const int n = (tail.samples() + stride - 1) / stride;
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = tail.states(i * stride, 0);
    const double dt = stride * (tail.times(tail.samples() - 1) - tail.times(0)) / (tail.samples() - 1);

    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= n;
    for (double& v : y) v -= mean;

    // Unbiased autocorrelation normalized by lag-0; capping the lag at a third
    // of the record guarantees at least three periods support the estimate.
    const int k_max = (n - 1) / 3;
    if (k_max < 2) {
        throw input_error("detect_period: post-transient segment too short for period search");
    }
    auto acorr = [&](int k) {
        double s = 0.0;
        for (int t = 0; t + k < n; ++t) s += y[static_cast<std::size_t>(t)] * y[static_cast<std::size_t>(t + k)];
        return s / (n - k);
    };
    const double c0 = acorr(0);
    if (!(c0 > 0.0)) {
        throw analysis_error("detect_period: signal has no variance (constant trajectory)");
    }
    std::vector<double> rho(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) rho[static_cast<std::size_t>(k)] = acorr(k) / c0;

    int first_negative = -1;
    for (int k = 1; k <= k_max; ++k) {
        if (rho[static_cast<std::size_t>(k)] < 0.0) {
            first_negative = k;
            break;
        }
    }
    if (first_negative < 0) {
        throw analysis_error("detect_period: no periodicity detected (autocorrelation never decays)");
    }
    int k_star = -1;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = first_negative; k <= k_max; ++k) {
        if (rho[static_cast<std::size_t>(k)] > best) {
            best = rho[static_cast<std::size_t>(k)];
            k_star = k;
        }
    }
    if (k_star <= 0 || best < 0.5) {
        throw analysis_error("detect_period: dominant autocorrelation peak below 0.5 confidence");
    }

    double k_refined = k_star;
    if (k_star > 0 && k_star < k_max) {
        const double rm = rho[static_cast<std::size_t>(k_star - 1)];
        const double r0 = rho[static_cast<std::size_t>(k_star)];
        const double rp = rho[static_cast<std::size_t>(k_star + 1)];
        const double denom = rm - 2.0 * r0 + rp;
        if (denom < 0.0) k_refined += 0.5 * (rm - rp) / denom;
    }

    PeriodEstimate est;
    est.t_p = k_refined * dt;
    est.confidence = std::clamp(best, 0.0, 1.0);
    return est;
}

ManifoldModel extract_limit_cycle(const Trajectory& traj, double transient_time, int resample_n) {
    if (resample_n < 8) {
        throw input_error("extract_limit_cycle: resample_n must be at least 8");
    }
    const PeriodEstimate period = detect_period(traj, transient_time);
    const Trajectory tail = traj.tail_from(transient_time);

    const int last = tail.last_index_at_or_before(tail.times(0) + period.t_p);
    if (last < 2) {
        throw analysis_error("extract_limit_cycle: detected period spans too few samples");
    }
    const ManifoldModel raw = ManifoldModel::polyline(tail.states.topRows(last + 1));

    Eigen::MatrixXd vertices(resample_n, tail.dim());
    const double step = raw.total_length() / resample_n;
    for (int j = 0; j < resample_n; ++j) {
        vertices.row(j) = raw.point_at_arclength(j * step).transpose();
    }
    return ManifoldModel::polyline(std::move(vertices));
}

CenterSet equispaced_centers(const ManifoldModel& loop, int count) {
    if (loop.kind() != ManifoldKind::polyline_loop) {
        throw input_error("equispaced_centers: need a polyline loop model");
    }
    if (count < 1) {
        throw input_error("equispaced_centers: count must be positive");
    }
    Eigen::MatrixXd pts(count, loop.dim());
    const double step = loop.total_length() / count;
    for (int i = 0; i < count; ++i) {
        pts.row(i) = loop.point_at_arclength(i * step).transpose();
    }
    return CenterSet(std::move(pts));
}

} // namespace kernelpe
