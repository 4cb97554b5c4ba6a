#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "kernelpe/bounds.hpp"
#include "kernelpe/estimator.hpp"
#include "kernelpe/limit_cycle.hpp"
#include "kernelpe/pe.hpp"

namespace kernelpe {

enum class ExperimentKind {
    piezo,
    finite_dim,
};

/// Scaled-coordinate parameters of the piezoelectric oscillator example.
struct PiezoParams {
    double modal_mass = 0.9745;
    double modal_stiffness = 329.9006;
    double k_n1 = -1.2901e5;
    double k_n2 = 1.2053e9;
    double scaling = 0.02;
};

struct CentersConfig {
    std::string source = "auto"; // "auto" (equispaced on the limit cycle), "file", "points"
    int count = 50;
    std::string file;
    std::optional<Eigen::MatrixXd> points;
};

struct EstimatorSection {
    double gamma = 0.001;
    LearningMode mode = LearningMode::gradient;
    std::optional<double> phi;      // nullopt = "auto": ||B|| vn_sup / lambda_a
    double lambda_a = 1.0;
    bool use_measured_drift = false;
    std::optional<Eigen::MatrixXd> q; // nullopt = identity
};

struct IntegrationSection {
    std::optional<double> dt_s;   // nullopt = "auto": t_p / 2000
    double t_end_s = 150.0;
    double transient_time_s = 2.0;
    double pe_horizon_s = 10.0;   // plant-only horizon past the transient
    std::optional<Eigen::VectorXd> x0;     // piezo default [0.05, 0]
    std::optional<Eigen::VectorXd> x_hat0; // default: x0
    double alpha0_fill = 0.001;
    std::optional<Eigen::VectorXd> alpha0; // overrides the fill value
};

struct PeSection {
    std::optional<double> epsilon;        // nullopt = auto selection
    std::optional<double> window_len_s;   // nullopt = 2 * t_p
    std::optional<double> start_time_s;   // nullopt = transient_time
    std::optional<double> dwell_floor_s;  // nullopt = 4 * dt
    double eig_safety = 0.5;
    std::string model = "ambient"; // "ambient" | "loop"
};

struct GridSection {
    std::optional<Eigen::MatrixXd> bounds; // 2 x d (row 0 = lo, row 1 = hi); nullopt = auto
    Eigen::VectorXi resolution;            // default 101 per axis
};

struct Pe1Section {
    std::optional<double> gamma1;
    std::optional<double> delta1;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::piezo;
    PiezoParams piezo;
    std::optional<Eigen::MatrixXd> plant_A; // finite_dim plant
    std::optional<Eigen::VectorXd> plant_B;
    KernelSpec kernel{KernelFamily::sobolev_matern_3_2, 0.005};
    CentersConfig centers;
    std::optional<Eigen::VectorXd> alpha_star; // finite_dim
    EstimatorSection estimator;
    IntegrationSection integration;
    PeSection pe;
    GridSection grid;
    Pe1Section pe1;
    int limit_cycle_resample_n = 1024;
    std::uint64_t seed = 0;
    std::string output_dir = "out";

    bool operator==(const ExperimentConfig& other) const;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
std::string to_json_string(const ExperimentConfig& cfg);

/// Scaled piezo plant: A = [[0, 1], [-K/M, 0]], B = (0, 1)^T,
/// f(z) = -(K_N1/M)(s z_1)^3 - (K_N2/M)(s z_1)^5. A is marginally stable;
/// construction warns instead of rejecting.
PlantModel build_piezo_plant(const ExperimentConfig& cfg);

struct OutputBundle {
    std::filesystem::path dir;
    std::map<std::string, std::string> file_hashes; // file name -> fnv1a64 hex
    PeriodEstimate period;
    ManifoldModel limit_cycle;
    CenterSet centers;
    PeCertificate certificate;
    BoundReport bound_report;
    SimResult sim;
    RkhsFunction f_hat_final;
    double vn_sup = 0.0;
    double eta_coverage = 0.0; // max distance of visited states to the centers
    bool trajectory_excursion = false;
};

/// Full pipeline: plant-only run past the transient, limit-cycle extraction,
/// center placement, sufficient-condition check, coupled estimation run,
/// pointwise error grid, bound report, and the hashed artifact bundle.
OutputBundle run_piezo_experiment(const ExperimentConfig& cfg);

/// Same pipeline with f_true = RkhsFunction(centers, alpha_star); the result
/// carries the ||alpha_hat - alpha_star|| series.
OutputBundle run_finite_dim_experiment(const ExperimentConfig& cfg,
                                       const Eigen::VectorXd& alpha_star);

/// FNV-1a (64-bit) content hash, lowercase hex.
std::string hash_file(const std::filesystem::path& path);

} // namespace kernelpe
