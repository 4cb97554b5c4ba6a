#include "kernelpe/pe.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "kernelpe/errors.hpp"

namespace kernelpe {

namespace {

constexpr int kMcSamples = 64;
constexpr int kMaxHalvings = 40;
constexpr double kBisectRelTol = 1e-3;
constexpr double kCapShrink = 0.999; // keeps epsilon strictly below the Condition-1 bound

double sigma_min(const Eigen::MatrixXd& S) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(S);
    return svd.singularValues().minCoeff();
}

// Raw (unconditioned) kernel matrix S(y_1..y_n) with rows indexed by the
// perturbed points and columns by the reference centers.
Eigen::MatrixXd kernel_matrix(const KernelSpec& spec, const Eigen::MatrixXd& row_points,
                              const CenterSet& cols) {
    Eigen::MatrixXd S(row_points.rows(), cols.size());
    for (Eigen::Index i = 0; i < row_points.rows(); ++i) {
        for (int j = 0; j < cols.size(); ++j) {
            S(i, j) = eval_kernel(spec, cols.point(j), row_points.row(i).transpose());
        }
    }
    return S;
}

Eigen::VectorXd sample_in_ball(const Eigen::VectorXd& center, double radius,
                               std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::VectorXd dir(center.size());
    double norm = 0.0;
    do {
        for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = gauss(rng);
        norm = dir.norm();
    } while (norm == 0.0);
    const double r = radius * std::pow(unit(rng), 1.0 / static_cast<double>(center.size()));
    return center + (r / norm) * dir;
}

// One perturbed collection {y_i}, d_M(x_i, y_i) <= eps.
Eigen::MatrixXd perturb_centers(const CenterSet& centers, const ManifoldModel& model,
                                const std::vector<double>& center_arcs, double eps,
                                std::mt19937_64& rng) {
    Eigen::MatrixXd y(centers.size(), centers.dim());
    if (model.kind() == ManifoldKind::ambient_euclidean) {
        for (int i = 0; i < centers.size(); ++i) {
            y.row(i) = sample_in_ball(centers.point(i), eps, rng).transpose();
        }
    } else {
        std::uniform_real_distribution<double> offset(-eps, eps);
        for (int i = 0; i < centers.size(); ++i) {
            y.row(i) = model.point_at_arclength(center_arcs[static_cast<std::size_t>(i)] + offset(rng))
                           .transpose();
        }
    }
    return y;
}

} // namespace

EpsilonSelection select_epsilon(const KernelSpec& spec, const CenterSet& centers,
                                const ManifoldModel& model, const PeConfig& cfg) {
    if (centers.size() < 1) {
        throw input_error("select_epsilon: need at least one center");
    }
    if (!(cfg.eig_safety > 0.0 && cfg.eig_safety < 1.0)) {
        throw input_error("select_epsilon: eig_safety must lie in (0, 1)");
    }

    // Condition-1 cap: strictly below half the smallest pairwise geodesic
    // distance. With one center the condition is vacuous; fall back to the
    // loop snap tolerance or an explicit override.
    double cap = 0.0;
    if (centers.size() >= 2) {
        const double dmin = min_pairwise_distance(model, centers);
        if (!(dmin > 0.0)) {
            throw input_error("select_epsilon: centers must have positive pairwise distance");
        }
        cap = kCapShrink * 0.5 * dmin;
    } else if (cfg.epsilon_cap) {
        cap = kCapShrink * *cfg.epsilon_cap;
    } else if (model.kind() == ManifoldKind::polyline_loop) {
        cap = kCapShrink * model.snap_tolerance();
    } else {
        throw input_error(
            "select_epsilon: single center in ambient space needs an explicit epsilon_cap");
    }

    std::vector<double> center_arcs;
    if (model.kind() == ManifoldKind::polyline_loop) {
        center_arcs.reserve(static_cast<std::size_t>(centers.size()));
        for (int i = 0; i < centers.size(); ++i) {
            center_arcs.push_back(model.snap_arclength(centers.point(i)));
        }
    }

    const double smin_ref = sigma_min(kernel_matrix(spec, centers.points(), centers));
    const double lambda_min_sts = smin_ref * smin_ref;
    const double threshold = cfg.eig_safety * lambda_min_sts;
    if (!(lambda_min_sts > 0.0)) {
        throw analysis_error("select_epsilon: Gram matrix at the centers is singular");
    }

    std::mt19937_64 rng(cfg.seed);
    auto validate = [&](double eps) {
        for (int k = 0; k < kMcSamples; ++k) {
            const Eigen::MatrixXd Sy =
                kernel_matrix(spec, perturb_centers(centers, model, center_arcs, eps, rng), centers);
            const double s = sigma_min(Sy);
            if (!(s * s > threshold)) return false;
        }
        return true;
    };

    EpsilonSelection out;
    out.lambda_min_sts = lambda_min_sts;
    out.theta = std::sqrt(threshold);

    if (validate(cap)) {
        out.epsilon = cap;
        return out;
    }
    double hi = cap; // failing
    double lo = cap;
    bool found = false;
    for (int i = 0; i < kMaxHalvings; ++i) {
        lo *= 0.5;
        if (validate(lo)) {
            found = true;
            break;
        }
        hi = lo;
    }
    if (!found) {
        throw analysis_error(
            "select_epsilon: no epsilon down to cap*2^-40 passes the eigenvalue check "
            "(kernel too flat or centers too close)");
    }
    while (hi - lo > kBisectRelTol * lo) {
        const double mid = 0.5 * (lo + hi);
        if (validate(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.epsilon = lo;
    return out;
}

namespace {

// In-ball indicator for one center over all samples. Off-loop samples (beyond
// the snap tolerance) count as outside every ball.
void center_indicators(const Trajectory& traj, const std::vector<double>& sample_arcs,
                       const std::vector<bool>& sample_on_loop, const ManifoldModel& model,
                       const Eigen::VectorXd& center, double center_arc, double eps,
                       std::vector<unsigned char>& out) {
    const int n = traj.samples();
    out.assign(static_cast<std::size_t>(n), 0);
    if (model.kind() == ManifoldKind::ambient_euclidean) {
        for (int k = 0; k < n; ++k) {
            out[static_cast<std::size_t>(k)] =
                (traj.states.row(k).transpose() - center).norm() <= eps ? 1 : 0;
        }
    } else {
        for (int k = 0; k < n; ++k) {
            out[static_cast<std::size_t>(k)] =
                sample_on_loop[static_cast<std::size_t>(k)] &&
                        model.arc_distance(sample_arcs[static_cast<std::size_t>(k)], center_arc) <= eps
                    ? 1
                    : 0;
        }
    }
}

void snap_samples(const Trajectory& traj, const ManifoldModel& model,
                  std::vector<double>& arcs, std::vector<bool>& on_loop) {
    const int n = traj.samples();
    arcs.assign(static_cast<std::size_t>(n), 0.0);
    on_loop.assign(static_cast<std::size_t>(n), true);
    if (model.kind() != ManifoldKind::polyline_loop) return;
    for (int k = 0; k < n; ++k) {
        try {
            arcs[static_cast<std::size_t>(k)] = model.snap_arclength(traj.state(k));
        } catch (const manifold_domain_error&) {
            on_loop[static_cast<std::size_t>(k)] = false;
        }
    }
}

double window_dwell(const Trajectory& traj, const std::vector<unsigned char>& m, int k0, int k1) {
    double dwell = 0.0;
    for (int k = k0; k < k1; ++k) {
        const int mk = m[static_cast<std::size_t>(k)] + m[static_cast<std::size_t>(k + 1)];
        if (mk > 0) dwell += 0.5 * mk * (traj.times(k + 1) - traj.times(k));
    }
    return dwell;
}

} // namespace

Eigen::VectorXd dwell_times(const Trajectory& traj, const CenterSet& centers, double epsilon,
                            double t0, double t1, const ManifoldModel& model) {
    if (!(t1 > t0)) {
        throw input_error("dwell_times: window must have positive length");
    }
    if (t0 < traj.times(0) - 1e-12 || t1 > traj.times(traj.samples() - 1) + 1e-12) {
        throw input_error("dwell_times: window lies outside the trajectory span");
    }
    std::vector<double> arcs;
    std::vector<bool> on_loop;
    snap_samples(traj, model, arcs, on_loop);

    const int k0 = traj.first_index_at_or_after(t0);
    const int k1 = traj.last_index_at_or_before(t1);

    Eigen::VectorXd dwell = Eigen::VectorXd::Zero(centers.size());
    std::vector<unsigned char> m;
    for (int c = 0; c < centers.size(); ++c) {
        const double center_arc =
            model.kind() == ManifoldKind::polyline_loop ? model.snap_arclength(centers.point(c)) : 0.0;
        center_indicators(traj, arcs, on_loop, model, centers.point(c), center_arc, epsilon, m);
        if (k1 > k0) dwell(c) = window_dwell(traj, m, k0, k1);
    }
    return dwell;
}

PeCertificate check_sufficient_condition(const Trajectory& traj, const CenterSet& centers,
                                         const KernelSpec& spec, const ManifoldModel& model,
                                         const PeConfig& cfg) {
    if (!(cfg.window_len > 0.0)) {
        throw input_error("check_sufficient_condition: window_len must be positive");
    }
    const double t_begin = traj.times(0);
    const double t_end = traj.times(traj.samples() - 1);
    if (cfg.start_time < t_begin - 1e-12) {
        throw input_error("check_sufficient_condition: start_time precedes the trajectory");
    }
    if (t_end - cfg.start_time < 2.0 * cfg.window_len) {
        throw input_error(
            "check_sufficient_condition: trajectory span must cover start_time + 2*window_len");
    }

    PeCertificate cert;
    cert.window_len = cfg.window_len;
    cert.window_stride = 0.25 * cfg.window_len;
    cert.start_time = cfg.start_time;
    cert.eig_safety = cfg.eig_safety;
    cert.seed = cfg.seed;
    cert.n_centers = centers.size();
    cert.horizon = {cfg.start_time, t_end};
    cert.dwell_floor = cfg.dwell_floor ? *cfg.dwell_floor : 4.0 * traj.median_dt();

    if (cfg.epsilon) {
        cert.epsilon = *cfg.epsilon;
        const double smin = sigma_min(kernel_matrix(spec, centers.points(), centers));
        cert.theta = std::sqrt(cfg.eig_safety * smin * smin);
    } else {
        const EpsilonSelection sel = select_epsilon(spec, centers, model, cfg);
        cert.epsilon = sel.epsilon;
        cert.theta = sel.theta;
    }

    const GramMatrix S = gram(spec, centers);
    cert.lambda_bar = S.max_eig();
    cert.lambda_underbar = S.min_eig();

    // Window grid.
    std::vector<double> window_starts;
    for (double t = cfg.start_time; t + cfg.window_len <= t_end + 1e-12; t += cert.window_stride) {
        window_starts.push_back(t);
    }
    cert.n_windows = static_cast<int>(window_starts.size());

    std::vector<double> arcs;
    std::vector<bool> on_loop;
    snap_samples(traj, model, arcs, on_loop);

    cert.per_center_min_dwell = Eigen::VectorXd::Zero(centers.size());
    cert.tau0 = std::numeric_limits<double>::infinity();
    std::vector<unsigned char> m;
    std::vector<double> edge_prefix(static_cast<std::size_t>(traj.samples()), 0.0);
    for (int c = 0; c < centers.size(); ++c) {
        const double center_arc =
            model.kind() == ManifoldKind::polyline_loop ? model.snap_arclength(centers.point(c)) : 0.0;
        center_indicators(traj, arcs, on_loop, model, centers.point(c), center_arc, cert.epsilon, m);
        edge_prefix[0] = 0.0;
        for (int k = 0; k + 1 < traj.samples(); ++k) {
            const int mk = m[static_cast<std::size_t>(k)] + m[static_cast<std::size_t>(k + 1)];
            edge_prefix[static_cast<std::size_t>(k + 1)] =
                edge_prefix[static_cast<std::size_t>(k)] +
                (mk > 0 ? 0.5 * mk * (traj.times(k + 1) - traj.times(k)) : 0.0);
        }
        double center_min = std::numeric_limits<double>::infinity();
        for (std::size_t w = 0; w < window_starts.size(); ++w) {
            const int k0 = traj.first_index_at_or_after(window_starts[w]);
            const int k1 = traj.last_index_at_or_before(window_starts[w] + cfg.window_len);
            const double dwell =
                k1 > k0 ? edge_prefix[static_cast<std::size_t>(k1)] - edge_prefix[static_cast<std::size_t>(k0)]
                        : 0.0;
            if (dwell < center_min) center_min = dwell;
            if (dwell < cert.tau0) {
                cert.tau0 = dwell;
                cert.worst_window = {window_starts[w], window_starts[w] + cfg.window_len};
            }
        }
        cert.per_center_min_dwell(c) = center_min;
    }

    cert.verdict = cert.tau0 >= cert.dwell_floor;
    cert.gamma2 = compute_gamma2(cert.tau0, cert.theta, cert.lambda_bar);
    return cert;
}

} // namespace kernelpe
