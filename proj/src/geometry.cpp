#include "craft/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace craft::geometry {

double normalize_angle(double rad) {
  double a = std::fmod(rad, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

double Vec2::norm() const { return std::hypot(x, y); }

double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Pose2D::Pose2D(double px, double py, double pyaw)
    : x(px), y(py), yaw(normalize_angle(pyaw)) {}

Vec2 Pose2D::heading_vector() const { return {std::cos(yaw), std::sin(yaw)}; }

Vec2 Pose2D::to_global(const Vec2& local) const {
  const double c = std::cos(yaw), s = std::sin(yaw);
  return {x + c * local.x - s * local.y, y + s * local.x + c * local.y};
}

Vec2 Pose2D::to_local(const Vec2& global) const {
  const double c = std::cos(yaw), s = std::sin(yaw);
  const double dx = global.x - x, dy = global.y - y;
  return {c * dx + s * dy, -s * dx + c * dy};
}

OrientedBox::OrientedBox(const Pose2D& c, double hl, double hw)
    : center(c), half_length(hl), half_width(hw) {
  if (hl <= 0.0 || hw <= 0.0)
    throw std::invalid_argument("OrientedBox: half extents must be positive");
}

std::array<Vec2, 4> OrientedBox::corners() const {
  const double l = half_length, w = half_width;
  return {center.to_global({l, w}), center.to_global({-l, w}),
          center.to_global({-l, -w}), center.to_global({l, -w})};
}

Polyline::Polyline(std::vector<Vec2> points) : points_(std::move(points)) {
  if (points_.size() < 2)
    throw std::invalid_argument("Polyline: needs at least 2 points");
  arclen_.resize(points_.size());
  arclen_[0] = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const double d = distance(points_[i - 1], points_[i]);
    if (d < 1e-6)
      throw std::invalid_argument("Polyline: coincident consecutive points");
    arclen_[i] = arclen_[i - 1] + d;
  }
}

Vec2 Polyline::point_at(double s) const {
  if (points_.empty()) return {};
  if (s <= 0.0) return points_.front();
  if (s >= length()) return points_.back();
  const auto it = std::upper_bound(arclen_.begin(), arclen_.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - arclen_.begin());
  const double t = (s - arclen_[i - 1]) / (arclen_[i] - arclen_[i - 1]);
  return points_[i - 1] + (points_[i] - points_[i - 1]) * t;
}

double Polyline::heading_at(double s) const {
  if (points_.size() < 2) return 0.0;
  std::size_t i;
  if (s <= 0.0) {
    i = 1;
  } else if (s >= length()) {
    i = points_.size() - 1;
  } else {
    const auto it = std::upper_bound(arclen_.begin(), arclen_.end(), s);
    i = static_cast<std::size_t>(it - arclen_.begin());
  }
  const Vec2 d = points_[i] - points_[i - 1];
  return std::atan2(d.y, d.x);
}

std::vector<Vec2> transform_to_global(std::span<const Vec2> local_points,
                                      const Pose2D& ego_pose) {
  std::vector<Vec2> out;
  out.reserve(local_points.size());
  for (const Vec2& p : local_points) out.push_back(ego_pose.to_global(p));
  return out;
}

std::vector<Vec2> transform_to_local(std::span<const Vec2> global_points,
                                     const Pose2D& ego_pose) {
  std::vector<Vec2> out;
  out.reserve(global_points.size());
  for (const Vec2& p : global_points) out.push_back(ego_pose.to_local(p));
  return out;
}

namespace {

// Projects box corners onto an axis; separated iff the interval gap is
// strictly positive (closed-set convention).
bool separated_on_axis(const Vec2& axis, const std::array<Vec2, 4>& a,
                       const std::array<Vec2, 4>& b) {
  double amin = std::numeric_limits<double>::infinity(), amax = -amin;
  double bmin = amin, bmax = -amin;
  for (const Vec2& p : a) {
    const double d = p.dot(axis);
    amin = std::min(amin, d);
    amax = std::max(amax, d);
  }
  for (const Vec2& p : b) {
    const double d = p.dot(axis);
    bmin = std::min(bmin, d);
    bmax = std::max(bmax, d);
  }
  return amax < bmin || bmax < amin;
}

}  // namespace

bool sat_overlap(const OrientedBox& a, const OrientedBox& b) {
  const auto ca = a.corners();
  const auto cb = b.corners();
  const std::array<Vec2, 4> axes = {
      a.center.heading_vector(),
      Vec2{-a.center.heading_vector().y, a.center.heading_vector().x},
      b.center.heading_vector(),
      Vec2{-b.center.heading_vector().y, b.center.heading_vector().x}};
  for (const Vec2& axis : axes) {
    if (separated_on_axis(axis, ca, cb)) return false;
  }
  return true;
}

bool point_in_box(const Vec2& p, const OrientedBox& box) {
  const Vec2 local = box.center.to_local(p);
  return std::abs(local.x) <= box.half_length &&
         std::abs(local.y) <= box.half_width;
}

Projection project_onto_polyline(const Vec2& point, double heading,
                                 const Polyline& line) {
  const auto& pts = line.points();
  const auto& arc = line.cumulative_arclength();
  double best_d2 = std::numeric_limits<double>::infinity();
  Projection best;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Vec2 seg = pts[i + 1] - pts[i];
    const double len2 = seg.dot(seg);
    double t = (point - pts[i]).dot(seg) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 foot = pts[i] + seg * t;
    const Vec2 off = point - foot;
    const double d2 = off.dot(off);
    if (d2 < best_d2) {
      best_d2 = d2;
      const double seg_len = std::sqrt(len2);
      const Vec2 dir = seg * (1.0 / seg_len);
      best.arclength = arc[i] + t * seg_len;
      best.lateral_offset = dir.cross(off);  // left of travel positive
      best.heading_error = normalize_angle(heading - std::atan2(dir.y, dir.x));
    }
  }
  best.arclength = std::clamp(best.arclength, 0.0, line.length());
  return best;
}

}  // namespace craft::geometry
