#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <string>

#include "kernelpe/center_set.hpp"
#include "kernelpe/estimator.hpp"
#include "kernelpe/grid.hpp"
#include "kernelpe/manifold.hpp"
#include "kernelpe/trajectory.hpp"

// Plain comma-separated values, '.' decimal point regardless of locale,
// shortest round-trip formatting, '#' starts a comment line.
namespace kernelpe::csv {

std::string format_double(double v);

Eigen::MatrixXd read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m,
                  const std::string& header_comment = "");

/// Rows are (t, x_1, ..., x_d).
Trajectory read_trajectory(const std::filesystem::path& path);
void write_trajectory(const std::filesystem::path& path, const Trajectory& traj);

/// Rows are coordinates, then one optional value column when value_columns=1.
CenterSet read_centers(const std::filesystem::path& path, int value_columns = 0);
std::pair<CenterSet, Eigen::VectorXd> read_centers_with_values(const std::filesystem::path& path);
void write_centers(const std::filesystem::path& path, const CenterSet& centers,
                   const std::optional<Eigen::VectorXd>& values = std::nullopt);

/// Rows are (t, x, x_hat, ||x_tilde||, V).
void write_sim_result(const std::filesystem::path& path, const SimResult& r);
/// Rows are (t, ||alpha_hat - alpha_ref||); only when the series exists.
void write_coeff_error(const std::filesystem::path& path, const SimResult& r);

void write_grid(const std::filesystem::path& path, const GridField& field);
void write_loop(const std::filesystem::path& path, const ManifoldModel& loop);

} // namespace kernelpe::csv
