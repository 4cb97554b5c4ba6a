#pragma once

#include <Eigen/Dense>

namespace kernelpe {

/// An ordered set of kernel centers in ambient space, one point per row.
class CenterSet {
public:
    CenterSet() = default;
    explicit CenterSet(Eigen::MatrixXd points) : points_(std::move(points)) {}

    int size() const { return static_cast<int>(points_.rows()); }
    int dim() const { return static_cast<int>(points_.cols()); }
    Eigen::VectorXd point(int i) const { return points_.row(i).transpose(); }
    const Eigen::MatrixXd& points() const { return points_; }

    bool operator==(const CenterSet& other) const { return points_ == other.points_; }

private:
    Eigen::MatrixXd points_;
};

} // namespace kernelpe
