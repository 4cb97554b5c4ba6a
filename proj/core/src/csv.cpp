#include "kernelpe/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "kernelpe/errors.hpp"

namespace kernelpe::csv {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary); // '\n' endings on every platform
    if (!out) {
        throw input_error("cannot open file for writing: " + path.string());
    }
    return out;
}

std::vector<std::vector<double>> read_rows(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open file: " + path.string());
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::vector<double> row;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        while (p < end) {
            while (p < end && (*p == ' ' || *p == '\t')) ++p;
            double v = 0.0;
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc()) {
                throw input_error(path.string() + ":" + std::to_string(lineno) +
                                  ": cannot parse number");
            }
            row.push_back(v);
            p = next;
            while (p < end && (*p == ' ' || *p == '\t')) ++p;
            if (p < end) {
                if (*p != ',') {
                    throw input_error(path.string() + ":" + std::to_string(lineno) +
                                      ": expected ',' separator");
                }
                ++p;
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw input_error(path.string() + ": no data rows");
    }
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) {
            throw input_error(path.string() + ": inconsistent column counts");
        }
    }
    return rows;
}

Eigen::MatrixXd rows_to_matrix(const std::vector<std::vector<double>>& rows) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

void write_row(std::ofstream& out, const Eigen::RowVectorXd& row) {
    for (Eigen::Index j = 0; j < row.size(); ++j) {
        if (j) out << ',';
        out << format_double(row(j));
    }
    out << '\n';
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw numeric_error("format_double: conversion failed");
    }
    return std::string(buf, p);
}

Eigen::MatrixXd read_matrix(const std::filesystem::path& path) {
    return rows_to_matrix(read_rows(path));
}

void write_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m,
                  const std::string& header_comment) {
    std::ofstream out = open_out(path);
    if (!header_comment.empty()) out << "# " << header_comment << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) write_row(out, m.row(i));
}

Trajectory read_trajectory(const std::filesystem::path& path) {
    const Eigen::MatrixXd m = read_matrix(path);
    if (m.cols() < 2) {
        throw input_error(path.string() + ": trajectory needs columns (t, x_1, ..., x_d)");
    }
    return make_trajectory(m.col(0), m.rightCols(m.cols() - 1));
}

void write_trajectory(const std::filesystem::path& path, const Trajectory& traj) {
    std::ofstream out = open_out(path);
    out << "# t, x_1 .. x_" << traj.dim() << '\n';
    for (int i = 0; i < traj.samples(); ++i) {
        out << format_double(traj.times(i));
        for (int j = 0; j < traj.dim(); ++j) out << ',' << format_double(traj.states(i, j));
        out << '\n';
    }
}

CenterSet read_centers(const std::filesystem::path& path, int value_columns) {
    const Eigen::MatrixXd m = read_matrix(path);
    if (m.cols() <= value_columns) {
        throw input_error(path.string() + ": too few columns for a center set");
    }
    return CenterSet(m.leftCols(m.cols() - value_columns));
}

std::pair<CenterSet, Eigen::VectorXd> read_centers_with_values(
    const std::filesystem::path& path) {
    const Eigen::MatrixXd m = read_matrix(path);
    if (m.cols() < 2) {
        throw input_error(path.string() + ": need coordinate columns plus a value column");
    }
    return {CenterSet(m.leftCols(m.cols() - 1)), m.col(m.cols() - 1)};
}

void write_centers(const std::filesystem::path& path, const CenterSet& centers,
                   const std::optional<Eigen::VectorXd>& values) {
    if (values && values->size() != centers.size()) {
        throw input_error("write_centers: value count must match center count");
    }
    std::ofstream out = open_out(path);
    for (int i = 0; i < centers.size(); ++i) {
        for (int j = 0; j < centers.dim(); ++j) {
            if (j) out << ',';
            out << format_double(centers.points()(i, j));
        }
        if (values) out << ',' << format_double((*values)(i));
        out << '\n';
    }
}

void write_sim_result(const std::filesystem::path& path, const SimResult& r) {
    std::ofstream out = open_out(path);
    const int d = static_cast<int>(r.x.cols());
    out << "# t, x_1 .. x_" << d << ", xhat_1 .. xhat_" << d << ", state_error_norm, lyapunov_v"
        << (r.lyapunov_is_partial ? " (partial: alpha reference unavailable)" : "") << '\n';
    for (int i = 0; i < r.samples(); ++i) {
        out << format_double(r.times(i));
        for (int j = 0; j < d; ++j) out << ',' << format_double(r.x(i, j));
        for (int j = 0; j < d; ++j) out << ',' << format_double(r.x_hat(i, j));
        out << ',' << format_double(r.state_error_norm(i));
        out << ',' << format_double(r.lyapunov_v(i));
        out << '\n';
    }
}

void write_coeff_error(const std::filesystem::path& path, const SimResult& r) {
    if (!r.coeff_error_norm) {
        throw input_error("write_coeff_error: result has no coefficient error series");
    }
    std::ofstream out = open_out(path);
    out << "# t, coeff_error_norm"
        << (r.coeff_error_is_projection_relative ? " (projection-relative)" : "") << '\n';
    for (int i = 0; i < r.samples(); ++i) {
        out << format_double(r.times(i)) << ',' << format_double((*r.coeff_error_norm)(i)) << '\n';
    }
}

void write_grid(const std::filesystem::path& path, const GridField& field) {
    std::ofstream out = open_out(path);
    out << "# x_1 .. x_" << field.points.cols() << ", abs_error\n";
    for (Eigen::Index i = 0; i < field.points.rows(); ++i) {
        for (Eigen::Index j = 0; j < field.points.cols(); ++j) {
            out << format_double(field.points(i, j)) << ',';
        }
        out << format_double(field.values(i)) << '\n';
    }
}

void write_loop(const std::filesystem::path& path, const ManifoldModel& loop) {
    if (loop.kind() != ManifoldKind::polyline_loop) {
        throw input_error("write_loop: not a polyline loop model");
    }
    write_matrix(path, loop.loop_points(), "closed polyline, one vertex per row (last = first)");
}

} // namespace kernelpe::csv
