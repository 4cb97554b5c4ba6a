#include "kernelpe/trajectory.hpp"

#include <algorithm>
#include <vector>

#include "kernelpe/errors.hpp"

namespace kernelpe {

double Trajectory::median_dt() const {
    std::vector<double> steps(static_cast<std::size_t>(std::max<Eigen::Index>(times.size() - 1, 0)));
    for (Eigen::Index i = 0; i + 1 < times.size(); ++i) {
        steps[static_cast<std::size_t>(i)] = times(i + 1) - times(i);
    }
    if (steps.empty()) return 0.0;
    auto mid = steps.begin() + static_cast<std::ptrdiff_t>(steps.size() / 2);
    std::nth_element(steps.begin(), mid, steps.end());
    return *mid;
}

int Trajectory::first_index_at_or_after(double t) const {
    const double* begin = times.data();
    const double* end = begin + times.size();
    return static_cast<int>(std::lower_bound(begin, end, t) - begin);
}

int Trajectory::last_index_at_or_before(double t) const {
    const double* begin = times.data();
    const double* end = begin + times.size();
    return static_cast<int>(std::upper_bound(begin, end, t) - begin) - 1;
}

Trajectory Trajectory::tail_from(double t0) const {
    const int k = first_index_at_or_after(t0);
    Trajectory out;
    out.times = times.segment(k, times.size() - k);
    out.states = states.bottomRows(states.rows() - k);
    return out;
}

Trajectory make_trajectory(Eigen::VectorXd times, Eigen::MatrixXd states) {
    if (times.size() != states.rows()) {
        throw input_error("make_trajectory: time and state counts differ");
    }
    if (times.size() < 2) {
        throw input_error("make_trajectory: need at least two samples");
    }
    double min_step = std::numeric_limits<double>::infinity();
    double max_step = 0.0;
    for (Eigen::Index i = 0; i + 1 < times.size(); ++i) {
        const double dt = times(i + 1) - times(i);
        if (!(dt > 0.0)) {
            throw input_error("make_trajectory: times must be strictly increasing");
        }
        min_step = std::min(min_step, dt);
        max_step = std::max(max_step, dt);
    }
    if (max_step > 1.01 * min_step) {
        throw input_error("make_trajectory: time grid not near-uniform (max/min step ratio > 1.01)");
    }
    Trajectory t;
    t.times = std::move(times);
    t.states = std::move(states);
    return t;
}

} // namespace kernelpe
