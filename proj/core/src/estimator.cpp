#include "kernelpe/estimator.hpp"

#include <cmath>

#include "kernelpe/errors.hpp"
#include "kernelpe/lyapunov.hpp"

namespace kernelpe {

Eigen::VectorXd saturation(const Eigen::VectorXd& x, double phi) {
    if (!(phi > 0.0)) {
        throw input_error("saturation: phi must be positive");
    }
    Eigen::VectorXd s(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double u = x(i) / phi;
        s(i) = std::abs(u) <= 1.0 ? u : (x(i) > 0.0 ? 1.0 : -1.0);
    }
    return s;
}

Eigen::VectorXd dead_zone_error(const Eigen::VectorXd& x_tilde, double phi) {
    if (phi < 0.0) {
        throw input_error("dead_zone_error: phi must be nonnegative");
    }
    if (phi == 0.0) {
        return x_tilde;
    }
    // Computed directly so in-zone coordinates are exactly zero.
    Eigen::VectorXd d(x_tilde.size());
    for (Eigen::Index i = 0; i < x_tilde.size(); ++i) {
        const double v = x_tilde(i);
        d(i) = std::abs(v) <= phi ? 0.0 : (v > 0.0 ? v - phi : v + phi);
    }
    return d;
}

SimState coupled_rhs(const SimState& state, const PlantModel& plant, const EstimatorConfig& est,
                     const KernelSpec& kernel, const CenterSet& centers, const GramMatrix& S,
                     const Eigen::MatrixXd& P) {
    const Eigen::VectorXd r = kernel_vector(kernel, centers, state.x);
    const double f_hat = r.dot(state.alpha_hat);
    const Eigen::VectorXd x_tilde = state.x - state.x_hat;

    SimState d;
    d.t = 1.0;
    d.x = plant.A * state.x + plant.B * plant.f_true(state.x);
    if (est.use_measured_drift) {
        d.x_hat = plant.A * state.x + est.lambda_a * x_tilde + plant.B * f_hat;
    } else {
        d.x_hat = plant.A * state.x_hat + plant.B * f_hat;
    }

    double drive = 0.0;
    if (est.mode == LearningMode::gradient) {
        drive = plant.B.dot(P * x_tilde);
    } else {
        drive = plant.B.dot(dead_zone_error(x_tilde, est.phi));
    }
    d.alpha_hat = S.solve(r) * (drive / est.gamma);
    return d;
}

namespace {

void validate_estimator(const EstimatorConfig& est, int dim) {
    if (!(est.gamma > 0.0)) {
        throw input_error("simulate: gamma must be positive");
    }
    if (est.mode == LearningMode::dead_zone) {
        if (est.phi < 0.0) throw input_error("simulate: dead-zone phi must be nonnegative");
        if (!(est.lambda_a > 0.0)) throw input_error("simulate: dead-zone mode needs lambda_a > 0");
    }
    if (est.use_measured_drift && !(est.lambda_a > 0.0)) {
        throw input_error("simulate: measured-drift estimator needs lambda_a > 0");
    }
    if (est.Q.size() > 0) {
        if (est.Q.rows() != dim || est.Q.cols() != dim) {
            throw input_error("simulate: Q size must match the plant dimension");
        }
        if (!est.Q.isApprox(est.Q.transpose())) {
            throw input_error("simulate: Q must be symmetric");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(est.Q, Eigen::EigenvaluesOnly);
        if (!(es.eigenvalues().minCoeff() > 0.0)) {
            throw input_error("simulate: Q must be positive definite");
        }
    }
}

} // namespace

SimState SimResult::state_at(int i) const {
    SimState s;
    s.t = times(i);
    s.x = x.row(i).transpose();
    s.x_hat = x_hat.row(i).transpose();
    s.alpha_hat = alpha.row(i).transpose();
    return s;
}

SimResult simulate(const PlantModel& plant, const EstimatorConfig& est, const KernelSpec& kernel,
                   const CenterSet& centers, const Eigen::VectorXd& x0,
                   const Eigen::VectorXd& x_hat0, const Eigen::VectorXd& alpha0, double t_end,
                   double dt, const SimOptions& options) {
    const int d = plant.dim();
    const int n = centers.size();
    if (!(dt > 0.0) || !(t_end >= dt)) {
        throw input_error("simulate: need dt > 0 and t_end >= dt");
    }
    if (x0.size() != d || x_hat0.size() != d) {
        throw input_error("simulate: initial state dimension mismatch");
    }
    if (alpha0.size() != n) {
        throw input_error("simulate: alpha0 length must match the center count");
    }
    if (!x0.allFinite() || !x_hat0.allFinite() || !alpha0.allFinite()) {
        throw input_error("simulate: initial conditions must be finite");
    }
    validate_estimator(est, d);
    if (options.alpha_ref && options.alpha_ref->size() != n) {
        throw input_error("simulate: alpha_ref length must match the center count");
    }

    const GramMatrix S = gram(kernel, centers);
    if (!S.spd()) {
        throw numeric_error("simulate: Gram matrix singular after conditioning");
    }

    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(d, d);
    if (est.P_override) {
        if (est.P_override->rows() != d || est.P_override->cols() != d) {
            throw input_error("simulate: P_override size must match the plant dimension");
        }
        P = *est.P_override;
    } else if (est.mode == LearningMode::gradient) {
        const Eigen::MatrixXd Q_eff =
            est.Q.size() > 0 ? est.Q : Eigen::MatrixXd::Identity(d, d);
        const Eigen::MatrixXd A_eff = est.use_measured_drift
                                          ? (-est.lambda_a * Eigen::MatrixXd::Identity(d, d)).eval()
                                          : plant.A;
        P = solve_lyapunov(A_eff, Q_eff);
    }

    const int steps = static_cast<int>(std::floor(t_end / dt + 1e-9));
    const double phi_eff = est.mode == LearningMode::dead_zone ? est.phi : 0.0;

    SimResult res;
    res.P = P;
    res.times.resize(steps + 1);
    res.x.resize(steps + 1, d);
    res.x_hat.resize(steps + 1, d);
    res.alpha.resize(steps + 1, n);
    res.state_error_norm.resize(steps + 1);
    res.lyapunov_v.resize(steps + 1);
    if (options.alpha_ref) {
        res.coeff_error_norm = Eigen::VectorXd(steps + 1);
        res.coeff_error_is_projection_relative = options.alpha_ref_is_projection;
    } else {
        res.lyapunov_is_partial = true;
    }

    SimState s;
    s.t = 0.0;
    s.x = x0;
    s.x_hat = x_hat0;
    s.alpha_hat = alpha0;

    auto record = [&](int k) {
        res.times(k) = s.t;
        res.x.row(k) = s.x.transpose();
        res.x_hat.row(k) = s.x_hat.transpose();
        res.alpha.row(k) = s.alpha_hat.transpose();
        const Eigen::VectorXd x_tilde = s.x - s.x_hat;
        res.state_error_norm(k) = x_tilde.norm();
        const Eigen::VectorXd xd = dead_zone_error(x_tilde, phi_eff);
        const Eigen::VectorXd a_err =
            options.alpha_ref ? (s.alpha_hat - *options.alpha_ref).eval() : s.alpha_hat;
        res.lyapunov_v(k) = xd.squaredNorm() + est.gamma * a_err.dot(S.entries() * a_err);
        if (res.coeff_error_norm) (*res.coeff_error_norm)(k) = a_err.norm();
    };
    record(0);

    auto add_scaled = [](const SimState& a, double h, const SimState& k) {
        SimState out;
        out.t = a.t + h;
        out.x = a.x + h * k.x;
        out.x_hat = a.x_hat + h * k.x_hat;
        out.alpha_hat = a.alpha_hat + h * k.alpha_hat;
        return out;
    };

    for (int step = 1; step <= steps; ++step) {
        const SimState k1 = coupled_rhs(s, plant, est, kernel, centers, S, P);
        const SimState k2 =
            coupled_rhs(add_scaled(s, 0.5 * dt, k1), plant, est, kernel, centers, S, P);
        const SimState k3 =
            coupled_rhs(add_scaled(s, 0.5 * dt, k2), plant, est, kernel, centers, S, P);
        const SimState k4 = coupled_rhs(add_scaled(s, dt, k3), plant, est, kernel, centers, S, P);

        const double h6 = dt / 6.0;
        s.t = step * dt;
        s.x += h6 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        s.x_hat += h6 * (k1.x_hat + 2.0 * k2.x_hat + 2.0 * k3.x_hat + k4.x_hat);
        s.alpha_hat += h6 * (k1.alpha_hat + 2.0 * k2.alpha_hat + 2.0 * k3.alpha_hat + k4.alpha_hat);

        const bool finite = s.x.allFinite() && s.x_hat.allFinite() && s.alpha_hat.allFinite();
        if (!finite || s.x.norm() > 1e12 || s.x_hat.norm() > 1e12 || s.alpha_hat.norm() > 1e12) {
            throw numeric_error("simulate: state blew up at t = " + std::to_string(s.t));
        }
        record(step);
    }
    return res;
}

Trajectory integrate_plant(const PlantModel& plant, const Eigen::VectorXd& x0, double t_end,
                           double dt) {
    if (!(dt > 0.0) || !(t_end >= dt)) {
        throw input_error("integrate_plant: need dt > 0 and t_end >= dt");
    }
    if (x0.size() != plant.dim()) {
        throw input_error("integrate_plant: initial state dimension mismatch");
    }
    const int steps = static_cast<int>(std::floor(t_end / dt + 1e-9));
    Trajectory traj;
    traj.times.resize(steps + 1);
    traj.states.resize(steps + 1, plant.dim());

    auto rhs = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return plant.A * x + plant.B * plant.f_true(x);
    };

    Eigen::VectorXd x = x0;
    traj.times(0) = 0.0;
    traj.states.row(0) = x.transpose();
    for (int step = 1; step <= steps; ++step) {
        const Eigen::VectorXd k1 = rhs(x);
        const Eigen::VectorXd k2 = rhs(x + 0.5 * dt * k1);
        const Eigen::VectorXd k3 = rhs(x + 0.5 * dt * k2);
        const Eigen::VectorXd k4 = rhs(x + dt * k3);
        x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!x.allFinite() || x.norm() > 1e12) {
            throw numeric_error("integrate_plant: state blew up at t = " +
                                std::to_string(step * dt));
        }
        traj.times(step) = step * dt;
        traj.states.row(step) = x.transpose();
    }
    return traj;
}

} // namespace kernelpe
