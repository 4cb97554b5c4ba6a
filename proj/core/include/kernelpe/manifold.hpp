#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kernelpe/center_set.hpp"

namespace kernelpe {

enum class ManifoldKind {
    ambient_euclidean,
    polyline_loop,
};

/// Distance model for the set the trajectory lives on. Either plain Euclidean
/// space or a closed polyline approximating a 1-dimensional limit cycle; in
/// the polyline case the geodesic distance is arclength around the loop, and
/// queries must lie within the snap tolerance (2x the longest segment).
class ManifoldModel {
public:
    static ManifoldModel ambient(int dim);
    /// points: (m+1) x d closed polyline, last row == first row (within 1e-9
    /// of the loop diameter); stored closed exactly.
    static ManifoldModel polyline(Eigen::MatrixXd points);

    ManifoldKind kind() const { return kind_; }
    int dim() const { return dim_; }

    /// Geodesic distance. Ambient: ||x - y||. Loop: min(arc, L - arc) after
    /// snapping both points; throws manifold_domain_error beyond snap tolerance.
    double distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    // Polyline-only queries.
    double total_length() const { return total_length_; }
    double max_segment_length() const { return max_segment_length_; }
    double snap_tolerance() const { return snap_tolerance_; }
    const Eigen::MatrixXd& loop_points() const { return loop_points_; }
    const Eigen::VectorXd& cumulative_arclength() const { return cum_arclength_; }

    /// Unrestricted Euclidean distance from a point to the loop.
    double loop_point_distance(const Eigen::VectorXd& x) const;
    /// Arclength coordinate in [0, L) of the closest loop point; throws
    /// manifold_domain_error beyond snap tolerance.
    double snap_arclength(const Eigen::VectorXd& x) const;
    /// Point on the loop at arclength s (s taken mod L).
    Eigen::VectorXd point_at_arclength(double s) const;
    /// Loop distance between two arclength coordinates.
    double arc_distance(double s0, double s1) const;

private:
    ManifoldKind kind_ = ManifoldKind::ambient_euclidean;
    int dim_ = 0;
    Eigen::MatrixXd loop_points_;
    Eigen::VectorXd cum_arclength_;
    double total_length_ = 0.0;
    double max_segment_length_ = 0.0;
    double snap_tolerance_ = 0.0;
};

inline double distance(const ManifoldModel& model, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& y) {
    return model.distance(x, y);
}

/// h = max over probes of min over centers of d_M(center, probe).
double fill_distance(const ManifoldModel& model, const CenterSet& centers,
                     const std::vector<Eigen::VectorXd>& probe_points);

/// Smallest pairwise geodesic distance between distinct centers.
double min_pairwise_distance(const ManifoldModel& model, const CenterSet& centers);

} // namespace kernelpe
