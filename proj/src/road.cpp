#include "craft/road.hpp"

#include <cmath>
#include <limits>

namespace craft::road {

LaneQuery nearest_lane(const geometry::Vec2& point,
                       const std::vector<LaneStrip>& lanes) {
  LaneQuery best;
  double best_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lanes.size(); ++i) {
    const auto proj =
        geometry::project_onto_polyline(point, 0.0, lanes[i].centerline);
    const double lat = std::abs(proj.lateral_offset);
    const double margin = lat - 0.5 * lanes[i].width;
    if (margin < best_margin) {
      best_margin = margin;
      best.lane_index = static_cast<int>(i);
      best.lateral = lat;
      best.margin_outside = margin;
      best.tag = lanes[i].tag;
      best.connector = lanes[i].connector;
    }
  }
  return best;
}

std::vector<geometry::OrientedBox> lane_boxes(
    const std::vector<LaneStrip>& lanes) {
  std::vector<geometry::OrientedBox> boxes;
  for (const LaneStrip& lane : lanes) {
    const auto& pts = lane.centerline.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const geometry::Vec2 mid = (pts[i] + pts[i + 1]) * 0.5;
      const geometry::Vec2 d = pts[i + 1] - pts[i];
      const double len = d.norm();
      const geometry::Pose2D pose(mid.x, mid.y, std::atan2(d.y, d.x));
      // Slight longitudinal inflation closes gaps at segment joints.
      boxes.emplace_back(pose, 0.5 * len + 0.25, 0.5 * lane.width);
    }
  }
  return boxes;
}

bool point_on_map(const geometry::Vec2& point,
                  const std::vector<geometry::OrientedBox>& boxes) {
  for (const auto& b : boxes) {
    if (geometry::point_in_box(point, b)) return true;
  }
  return false;
}

}  // namespace craft::road
