#include "kernelpe/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernelpe/errors.hpp"

namespace kernelpe {

ManifoldModel ManifoldModel::ambient(int dim) {
    if (dim <= 0) throw input_error("ManifoldModel::ambient: dimension must be positive");
    ManifoldModel m;
    m.kind_ = ManifoldKind::ambient_euclidean;
    m.dim_ = dim;
    return m;
}

ManifoldModel ManifoldModel::polyline(Eigen::MatrixXd points) {
    if (points.rows() < 3) {
        throw input_error("ManifoldModel::polyline: need at least 3 vertices");
    }

    double open_length = 0.0;
    double open_max_seg = 0.0;
    for (Eigen::Index i = 1; i < points.rows(); ++i) {
        const double seg = (points.row(i) - points.row(i - 1)).norm();
        open_length += seg;
        open_max_seg = std::max(open_max_seg, seg);
    }
    const double closure_gap = (points.row(0) - points.row(points.rows() - 1)).norm();
    if (closure_gap > 0.0) {
        // Accept a vertex list and close it, as long as the closing segment is
        // on the scale of an ordinary segment.
        if (closure_gap > std::max(2.0 * open_max_seg, 0.05 * open_length)) {
            throw input_error("ManifoldModel::polyline: polyline is not closed (first far from last)");
        }
        points.conservativeResize(points.rows() + 1, Eigen::NoChange);
    }
    points.row(points.rows() - 1) = points.row(0);

    // Drop zero-length segments so arclength is strictly increasing.
    std::vector<Eigen::Index> keep;
    keep.push_back(0);
    for (Eigen::Index i = 1; i < points.rows(); ++i) {
        if ((points.row(i) - points.row(keep.back())).norm() > 0.0) keep.push_back(i);
    }
    Eigen::MatrixXd clean(static_cast<Eigen::Index>(keep.size()), points.cols());
    for (Eigen::Index i = 0; i < clean.rows(); ++i) clean.row(i) = points.row(keep[static_cast<std::size_t>(i)]);
    if (clean.rows() < 4) {
        throw input_error("ManifoldModel::polyline: fewer than 3 distinct vertices after dedup");
    }

    ManifoldModel m;
    m.kind_ = ManifoldKind::polyline_loop;
    m.dim_ = static_cast<int>(clean.cols());
    m.loop_points_ = std::move(clean);
    m.cum_arclength_.resize(m.loop_points_.rows());
    m.cum_arclength_(0) = 0.0;
    for (Eigen::Index i = 1; i < m.loop_points_.rows(); ++i) {
        const double seg = (m.loop_points_.row(i) - m.loop_points_.row(i - 1)).norm();
        m.max_segment_length_ = std::max(m.max_segment_length_, seg);
        m.cum_arclength_(i) = m.cum_arclength_(i - 1) + seg;
    }
    m.total_length_ = m.cum_arclength_(m.cum_arclength_.size() - 1);
    m.snap_tolerance_ = 2.0 * m.max_segment_length_;
    return m;
}

namespace {

struct SnapResult {
    double dist2;
    double arclength;
};

SnapResult snap_to_loop(const Eigen::MatrixXd& pts, const Eigen::VectorXd& cum,
                        const Eigen::VectorXd& x) {
    SnapResult best{std::numeric_limits<double>::infinity(), 0.0};
    for (Eigen::Index i = 0; i + 1 < pts.rows(); ++i) {
        const Eigen::VectorXd a = pts.row(i).transpose();
        Eigen::VectorXd ab = pts.row(i + 1).transpose() - a;
        const double len2 = ab.squaredNorm();
        double t = len2 > 0.0 ? (x - a).dot(ab) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double d2 = (x - a - t * ab).squaredNorm();
        if (d2 < best.dist2) {
            best.dist2 = d2;
            best.arclength = cum(i) + t * (cum(i + 1) - cum(i));
        }
    }
    return best;
}

} // namespace

double ManifoldModel::loop_point_distance(const Eigen::VectorXd& x) const {
    if (kind_ != ManifoldKind::polyline_loop) {
        throw input_error("loop_point_distance: not a polyline model");
    }
    return std::sqrt(snap_to_loop(loop_points_, cum_arclength_, x).dist2);
}

double ManifoldModel::snap_arclength(const Eigen::VectorXd& x) const {
    if (kind_ != ManifoldKind::polyline_loop) {
        throw input_error("snap_arclength: not a polyline model");
    }
    const SnapResult s = snap_to_loop(loop_points_, cum_arclength_, x);
    if (std::sqrt(s.dist2) > snap_tolerance_) {
        throw manifold_domain_error("point lies farther than the snap tolerance from the loop");
    }
    return s.arclength >= total_length_ ? 0.0 : s.arclength;
}

Eigen::VectorXd ManifoldModel::point_at_arclength(double s) const {
    if (kind_ != ManifoldKind::polyline_loop) {
        throw input_error("point_at_arclength: not a polyline model");
    }
    s = std::fmod(s, total_length_);
    if (s < 0.0) s += total_length_;
    const double* begin = cum_arclength_.data();
    const double* end = begin + cum_arclength_.size();
    Eigen::Index i = std::upper_bound(begin, end, s) - begin - 1;
    i = std::clamp<Eigen::Index>(i, 0, cum_arclength_.size() - 2);
    const double seg = cum_arclength_(i + 1) - cum_arclength_(i);
    const double t = seg > 0.0 ? (s - cum_arclength_(i)) / seg : 0.0;
    return (1.0 - t) * loop_points_.row(i).transpose() + t * loop_points_.row(i + 1).transpose();
}

double ManifoldModel::arc_distance(double s0, double s1) const {
    const double arc = std::abs(s0 - s1);
    return std::min(arc, total_length_ - arc);
}

double ManifoldModel::distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    if (x.size() != dim_ || y.size() != dim_) {
        throw input_error("ManifoldModel::distance: dimension mismatch");
    }
    if (kind_ == ManifoldKind::ambient_euclidean) {
        return (x - y).norm();
    }
    return arc_distance(snap_arclength(x), snap_arclength(y));
}

double fill_distance(const ManifoldModel& model, const CenterSet& centers,
                     const std::vector<Eigen::VectorXd>& probe_points) {
    if (centers.size() == 0) {
        throw input_error("fill_distance: empty center set");
    }
    double h = 0.0;
    for (const auto& p : probe_points) {
        double dmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < centers.size(); ++i) {
            dmin = std::min(dmin, model.distance(centers.point(i), p));
        }
        h = std::max(h, dmin);
    }
    return h;
}

double min_pairwise_distance(const ManifoldModel& model, const CenterSet& centers) {
    double dmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < centers.size(); ++i) {
        for (int j = i + 1; j < centers.size(); ++j) {
            dmin = std::min(dmin, model.distance(centers.point(i), centers.point(j)));
        }
    }
    return dmin;
}

} // namespace kernelpe
