#ifndef CRAFT_GEOMETRY_HPP_
#define CRAFT_GEOMETRY_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace craft::geometry {

constexpr double kPi = 3.14159265358979323846;

/// Wraps an angle into (-pi, pi].
double normalize_angle(double rad);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const;
};

double distance(const Vec2& a, const Vec2& b);

/// Planar pose. Yaw is normalized into (-pi, pi] on construction and
/// after every composition.
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;

  Pose2D() = default;
  Pose2D(double px, double py, double pyaw);

  Vec2 position() const { return {x, y}; }
  Vec2 heading_vector() const;

  /// Maps a point from the local frame of this pose to the world frame.
  Vec2 to_global(const Vec2& local) const;
  /// Maps a world-frame point into the local frame of this pose.
  Vec2 to_local(const Vec2& global) const;
};

/// Axis-aligned-in-body rectangle with strictly positive half extents.
struct OrientedBox {
  Pose2D center;
  double half_length = 1.0;  // along heading
  double half_width = 0.5;

  OrientedBox() = default;
  OrientedBox(const Pose2D& c, double hl, double hw);

  /// Corner positions in world frame, counter-clockwise.
  std::array<Vec2, 4> corners() const;
};

/// Piecewise-linear curve with cached cumulative arclength.
/// Consecutive points closer than 1e-6 m are rejected.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(std::vector<Vec2> points);

  const std::vector<Vec2>& points() const { return points_; }
  const std::vector<double>& cumulative_arclength() const { return arclen_; }
  double length() const { return arclen_.empty() ? 0.0 : arclen_.back(); }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  /// Point at a given arclength, clamped to the polyline ends.
  Vec2 point_at(double s) const;
  /// Tangent heading (radians) of the segment containing arclength s.
  double heading_at(double s) const;

 private:
  std::vector<Vec2> points_;
  std::vector<double> arclen_;
};

struct Projection {
  double arclength = 0.0;       // clamped to [0, length]
  double lateral_offset = 0.0;  // signed, left of travel positive
  double heading_error = 0.0;   // normalized into (-pi, pi]
};

/// Rigid transform of ego-frame points into the world frame.
std::vector<Vec2> transform_to_global(std::span<const Vec2> local_points,
                                      const Pose2D& ego_pose);
std::vector<Vec2> transform_to_local(std::span<const Vec2> global_points,
                                     const Pose2D& ego_pose);

/// Separating-axis overlap test. Boxes are closed sets: touching edges
/// count as overlap. Symmetric in its arguments.
bool sat_overlap(const OrientedBox& a, const OrientedBox& b);

/// Point containment in a closed oriented box.
bool point_in_box(const Vec2& p, const OrientedBox& box);

/// Projects a point with heading onto a polyline. Arclength clamps at the
/// polyline ends instead of extrapolating.
Projection project_onto_polyline(const Vec2& point, double heading,
                                 const Polyline& line);

}  // namespace craft::geometry

#endif  // CRAFT_GEOMETRY_HPP_
