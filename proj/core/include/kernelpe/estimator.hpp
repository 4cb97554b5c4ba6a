#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "kernelpe/gram.hpp"
#include "kernelpe/plant.hpp"
#include "kernelpe/trajectory.hpp"

namespace kernelpe {

enum class LearningMode {
    gradient,
    dead_zone,
};

struct EstimatorConfig {
    double gamma = 1.0;                        // scalar adaptation gain Gamma
    Eigen::MatrixXd Q;                         // SPD weight; empty -> identity
    LearningMode mode = LearningMode::gradient;
    double phi = 0.0;                          // dead-zone width (dead_zone mode)
    double lambda_a = 0.0;                     // error-dynamics rate; required for
                                               // dead_zone and for measured drift
    bool use_measured_drift = false;           // drive the estimator with A x + lambda_a x_tilde
    std::optional<Eigen::MatrixXd> P_override; // skip the Lyapunov solve
};

struct SimState {
    double t = 0.0;
    Eigen::VectorXd x;
    Eigen::VectorXd x_hat;
    Eigen::VectorXd alpha_hat;
};

struct SimOptions {
    /// Reference coefficients for the error series: the true alpha* when
    /// f_true lies in the span, otherwise the projection coefficients.
    std::optional<Eigen::VectorXd> alpha_ref;
    bool alpha_ref_is_projection = false;
};

struct SimResult {
    Eigen::VectorXd times;
    Eigen::MatrixXd x;       // one row per sample
    Eigen::MatrixXd x_hat;
    Eigen::MatrixXd alpha;   // one row per sample, n columns
    Eigen::VectorXd state_error_norm;
    Eigen::VectorXd lyapunov_v;
    std::optional<Eigen::VectorXd> coeff_error_norm;
    bool coeff_error_is_projection_relative = false;
    /// True when no reference coefficients were available and V uses the raw
    /// alpha-hat norm in place of the coefficient error.
    bool lyapunov_is_partial = false;
    Eigen::MatrixXd P; // the matrix actually used by the gradient law

    int samples() const { return static_cast<int>(times.size()); }
    SimState state_at(int i) const;
};

/// Per-coordinate saturation: x_i/phi when |x_i/phi| <= 1, else sign(x_i).
Eigen::VectorXd saturation(const Eigen::VectorXd& x, double phi);

/// Dead-zone error x - phi*sigma(x): exactly zero inside the zone, shrunk by
/// phi outside. phi = 0 is the identity.
Eigen::VectorXd dead_zone_error(const Eigen::VectorXd& x_tilde, double phi);

/// Time derivative of the coupled plant/estimator/coefficient state.
SimState coupled_rhs(const SimState& state, const PlantModel& plant, const EstimatorConfig& est,
                     const KernelSpec& kernel, const CenterSet& centers, const GramMatrix& S,
                     const Eigen::MatrixXd& P);

/// Fixed-step classical 4th-order integration of the coupled system,
/// recording every state. Throws numeric_error on blow-up (norm > 1e12 or
/// non-finite), naming the first offending time.
SimResult simulate(const PlantModel& plant, const EstimatorConfig& est, const KernelSpec& kernel,
                   const CenterSet& centers, const Eigen::VectorXd& x0,
                   const Eigen::VectorXd& x_hat0, const Eigen::VectorXd& alpha0, double t_end,
                   double dt, const SimOptions& options = {});

/// Plant-only RK4 run x' = A x + B f(x), recording every state.
Trajectory integrate_plant(const PlantModel& plant, const Eigen::VectorXd& x0, double t_end,
                           double dt);

} // namespace kernelpe
