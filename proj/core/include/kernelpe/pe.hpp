#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "kernelpe/gram.hpp"
#include "kernelpe/manifold.hpp"
#include "kernelpe/trajectory.hpp"

namespace kernelpe {

/// Configuration of the sufficient-condition check.
struct PeConfig {
    std::optional<double> epsilon;       // geodesic ball radius; nullopt = select automatically
    double window_len = 0.0;             // window length (Delta_2), seconds
    double start_time = 0.0;             // first window start (T_2), seconds
    std::optional<double> dwell_floor;   // verdict threshold tau_0_min; default 4x trajectory dt
    double eig_safety = 0.5;             // fraction of lambda_min(S^T S) the perturbed Gram must keep
    std::optional<double> epsilon_cap;   // override for the single-center cap
    std::uint64_t seed = 0;              // Monte-Carlo perturbation seed
};

struct EpsilonSelection {
    double epsilon = 0.0;
    double theta = 0.0;          // sqrt(eig_safety * lambda_min(S_x^T S_x))
    double lambda_min_sts = 0.0; // lambda_min(S_x^T S_x) at the unperturbed centers
};

/// Certificate of the verified sufficient condition over the observed horizon.
struct PeCertificate {
    double epsilon = 0.0;
    double theta = 0.0;
    double tau0 = 0.0;             // min dwell over all windows and centers, seconds
    double lambda_bar = 0.0;       // max eigenvalue of the symmetric Gram at the centers
    double lambda_underbar = 0.0;  // min eigenvalue (post-conditioning)
    double gamma2 = 0.0;           // tau0 * theta^2 / lambda_bar
    bool verdict = false;          // tau0 >= dwell_floor
    std::array<double, 2> worst_window{0.0, 0.0};
    Eigen::VectorXd per_center_min_dwell;
    double dwell_floor = 0.0;
    double window_len = 0.0;
    double window_stride = 0.0;
    double start_time = 0.0;
    double eig_safety = 0.0;
    int n_windows = 0;
    int n_centers = 0;
    std::uint64_t seed = 0;
    // The check certifies only what was observed; extension to t -> infinity
    // is an assumption the consumer must make explicitly.
    std::array<double, 2> horizon{0.0, 0.0};
};

/// Largest geodesic radius (up to the Condition-1 cap, bisection to relative
/// tolerance 1e-3) for which 64 Monte-Carlo perturbed center collections keep
/// lambda_min(S(y)^T S(y)) above eig_safety * lambda_min(S(x)^T S(x)).
EpsilonSelection select_epsilon(const KernelSpec& spec, const CenterSet& centers,
                                const ManifoldModel& model, const PeConfig& cfg);

/// Time the trajectory spends inside the geodesic epsilon-ball of each center
/// during [t0, t1], by trapezoid quadrature of the in-ball indicator.
Eigen::VectorXd dwell_times(const Trajectory& traj, const CenterSet& centers, double epsilon,
                            double t0, double t1, const ManifoldModel& model);

/// Slide windows of length window_len (stride window_len/4) from start_time,
/// take the worst dwell over windows and centers, and assemble the certificate.
PeCertificate check_sufficient_condition(const Trajectory& traj, const CenterSet& centers,
                                         const KernelSpec& spec, const ManifoldModel& model,
                                         const PeConfig& cfg);

inline double compute_gamma2(double tau0, double theta, double lambda_bar) {
    return tau0 * theta * theta / lambda_bar;
}

} // namespace kernelpe
